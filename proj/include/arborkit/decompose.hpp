// Exact search for "k forests plus a sparse remainder" decompositions.

#ifndef ARBORKIT_DECOMPOSE_HPP
#define ARBORKIT_DECOMPOSE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arborkit/graph.hpp"
#include "arborkit/rational.hpp"

namespace arborkit {

enum class RemainderKind { matching, forest, graph };

std::string_view to_string(RemainderKind kind);
RemainderKind parse_remainder_kind(std::string_view text);

struct Decomposition {
    std::vector<EdgeSubset> forests;
    EdgeSubset remainder;
    RemainderKind kind = RemainderKind::matching;
};

/// k forests plus a matching whenever the fractional arboricity is at most
/// k + 1/(3k+2).
struct Threshold {
    int k = 1;

    Rational epsilon() const { return Rational(1, 3 * k + 2); }
    Rational bound() const { return Rational(k) + epsilon(); }
    /// Remainder degree that suffices at fractional arboricity k + eps, 0 <= eps < 1:
    /// ceil((k+1)(k-1+2 eps) / (1-eps)).
    static std::int64_t weak_degree_bound(int k, const Rational& eps);
    std::int64_t weak_degree_bound() const { return weak_degree_bound(k, epsilon()); }
    /// Conjectured density k + d/(k+d+1) allowing k+1 forests, one of max degree d.
    static Rational conjecture_bound(int k, int d) { return Rational(k) + Rational(d, k + d + 1); }
};

struct SearchStats {
    std::int64_t nodes = 0;
    std::int64_t leaves = 0;
};

struct SearchOutcome {
    std::optional<Decomposition> decomposition;  // nullopt means EXHAUSTED
    SearchStats stats;

    bool exhausted() const noexcept { return !decomposition.has_value(); }
};

/// Branch and bound over maximal matchings M, accepting the first with
/// E \ M partitionable into k forests.
SearchOutcome decompose_forests_matching(const Graph& g, int k);

/// Finds D with max degree <= d (and acyclic for kind == forest) so that E \ D
/// splits into k forests. kind == forest is gated at `edge_limit` edges.
SearchOutcome decompose_forests_bounded(const Graph& g, int k, int d, RemainderKind kind,
                                        std::size_t edge_limit = 22);

struct VerifyResult {
    bool ok = true;
    std::string clause;  // first violated condition, empty when ok
};

/// Independent re-check of every decomposition invariant. `d` is the degree
/// bound for forest/graph remainders and ignored for matchings.
VerifyResult verify_decomposition(const Graph& g, const Decomposition& dec, int k, int d = 1);

}  // namespace arborkit

#endif  // ARBORKIT_DECOMPOSE_HPP
