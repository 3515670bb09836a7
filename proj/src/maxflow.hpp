// Dinic max-flow on integer capacities; internal to the density solver.

#ifndef ARBORKIT_SRC_MAXFLOW_HPP
#define ARBORKIT_SRC_MAXFLOW_HPP

#include <cstdint>
#include <limits>
#include <vector>

namespace arborkit::detail {

class MaxFlow {
public:
    using Capacity = std::int64_t;
    static constexpr Capacity infinite = std::numeric_limits<Capacity>::max() / 4;

    explicit MaxFlow(int nodes);

    void add_arc(int from, int to, Capacity capacity);
    Capacity run(int source, int sink);

    /// Nodes reachable from the source in the final residual network.
    std::vector<char> source_side(int source) const;

private:
    struct Arc {
        int to;
        Capacity residual;
    };

    bool levels(int source, int sink);
    Capacity push(int node, int sink, Capacity limit);

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

}  // namespace arborkit::detail

#endif  // ARBORKIT_SRC_MAXFLOW_HPP
