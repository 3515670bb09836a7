// Reproducible instances: rejection sampling below a fractional-arboricity
// bound, seeded random multigraphs and the catalog of small connected graphs.
//
// All randomness comes from std::mt19937_64 (its output sequence is fixed by
// the C++ standard) reduced to a range by unbiased rejection in `Rng::below`,
// so instances are bit-identical across platforms and standard libraries.

#ifndef ARBORKIT_GENERATOR_HPP
#define ARBORKIT_GENERATOR_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "arborkit/graph.hpp"
#include "arborkit/rational.hpp"

namespace arborkit {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

/// splitmix64 finaliser, used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

struct GenSpec {
    int n = 0;
    Rational target_bound{1};
    bool allow_parallel = false;
    std::uint64_t seed = 0;
    int max_rejections = 100000;
};

class GenerationError : public Error {
public:
    GenerationError(int attempts, int accepted_before);
};

struct GenResult {
    Graph graph;
    int attempts = 0;  // draws including the accepted one
};

/// Draws floor(bound * (n-1)) loop-free edges uniformly and accepts once the
/// fractional arboricity is at most the bound.
GenResult generate(const GenSpec& spec);

/// n vertices, m edges drawn uniformly among loop-free pairs (parallels allowed).
Graph random_multigraph(int n, int m, std::uint64_t seed);

/// One representative of every connected simple graph with 1..max_n vertices,
/// up to isomorphism (max_n <= 8).
std::vector<Graph> connected_graph_catalog(int max_n);

}  // namespace arborkit

#endif  // ARBORKIT_GENERATOR_HPP
