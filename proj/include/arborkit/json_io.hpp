// JSON encodings of results. Every document carries "schema": 1 and an
// "object" tag; rationals are always strings "p/q".

#ifndef ARBORKIT_JSON_IO_HPP
#define ARBORKIT_JSON_IO_HPP

#include <optional>

#include <json.hpp>

#include "arborkit/arboricity.hpp"
#include "arborkit/decompose.hpp"
#include "arborkit/domination.hpp"
#include "arborkit/prooftrace.hpp"

namespace arborkit {

using Json = nlohmann::ordered_json;

inline constexpr int json_schema_version = 1;

Json to_json(const EdgeSubset& s);
EdgeSubset edge_subset_from_json(const Json& j, std::size_t host_size);

Json arboricity_json(const ArboricityResult& r);
Json frac_json(const FracArbResult& r, FracMode mode);
Json partition_json(const PartitionResult& r, int k);
/// `outcome` may be exhausted; then forests and remainder are empty.
Json decomposition_json(const SearchOutcome& outcome, int k, int d, RemainderKind kind);
Json domination_json(const DominationResult& r, bool two_path);
Json prooftrace_json(const ProofTraceReport& r);

/// Parses the decomposition written by decomposition_json or partition_json.
Decomposition decomposition_from_json(const Json& j, std::size_t host_size);

}  // namespace arborkit

#endif  // ARBORKIT_JSON_IO_HPP
