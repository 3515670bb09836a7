#include "maxflow.hpp"

#include <algorithm>
#include <deque>

namespace arborkit::detail {

MaxFlow::MaxFlow(int nodes) : out_(static_cast<std::size_t>(nodes)) {}

void MaxFlow::add_arc(int from, int to, Capacity capacity) {
    out_[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, capacity});
    out_[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
}

bool MaxFlow::levels(int source, int sink) {
    level_.assign(out_.size(), -1);
    std::deque<int> queue{source};
    level_[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int a : out_[static_cast<std::size_t>(x)]) {
            const Arc& arc = arcs_[static_cast<std::size_t>(a)];
            if (arc.residual > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
                level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(x)] + 1;
                queue.push_back(arc.to);
            }
        }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
}

MaxFlow::Capacity MaxFlow::push(int node, int sink, Capacity limit) {
    if (node == sink) return limit;
    auto& i = next_[static_cast<std::size_t>(node)];
    for (; i < out_[static_cast<std::size_t>(node)].size(); ++i) {
        int a = out_[static_cast<std::size_t>(node)][i];
        Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.residual <= 0 ||
            level_[static_cast<std::size_t>(arc.to)] != level_[static_cast<std::size_t>(node)] + 1)
            continue;
        Capacity pushed = push(arc.to, sink, std::min(limit, arc.residual));
        if (pushed > 0) {
            arc.residual -= pushed;
            arcs_[static_cast<std::size_t>(a ^ 1)].residual += pushed;
            return pushed;
        }
    }
    return 0;
}

MaxFlow::Capacity MaxFlow::run(int source, int sink) {
    Capacity total = 0;
    while (levels(source, sink)) {
        next_.assign(out_.size(), 0);
        while (Capacity pushed = push(source, sink, infinite)) total += pushed;
    }
    return total;
}

std::vector<char> MaxFlow::source_side(int source) const {
    std::vector<char> seen(out_.size(), 0);
    std::deque<int> queue{source};
    seen[static_cast<std::size_t>(source)] = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int a : out_[static_cast<std::size_t>(x)]) {
            const Arc& arc = arcs_[static_cast<std::size_t>(a)];
            if (arc.residual > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
                seen[static_cast<std::size_t>(arc.to)] = 1;
                queue.push_back(arc.to);
            }
        }
    }
    return seen;
}

}  // namespace arborkit::detail
