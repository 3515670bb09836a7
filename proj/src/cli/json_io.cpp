#include "arborkit/json_io.hpp"

namespace arborkit {

namespace {

Json header(const char* object) {
    Json j;
    j["schema"] = json_schema_version;
    j["object"] = object;
    return j;
}

}  // namespace

Json to_json(const EdgeSubset& s) {
    Json arr = Json::array();
    for (EdgeId e : s.ids()) arr.push_back(e);
    return arr;
}

EdgeSubset edge_subset_from_json(const Json& j, std::size_t host_size) {
    if (!j.is_array()) throw Error("expected an array of edge ids");
    EdgeSubset s(host_size);
    for (const auto& item : j) {
        if (!item.is_number_integer()) throw Error("edge ids must be integers");
        auto e = item.get<long long>();
        if (e < 0 || static_cast<std::size_t>(e) >= host_size)
            throw Error("edge id " + std::to_string(e) + " out of range");
        if (s.contains(static_cast<EdgeId>(e)))
            throw Error("edge id " + std::to_string(e) + " listed twice in one part");
        s.insert(static_cast<EdgeId>(e));
    }
    return s;
}

Json arboricity_json(const ArboricityResult& r) {
    Json j = header("arboricity");
    if (r.infinite)
        j["value"] = "infinite";
    else
        j["value"] = r.value;
    j["witness_vertices"] = r.witness;
    return j;
}

Json frac_json(const FracArbResult& r, FracMode mode) {
    Json j = header("frac");
    j["mode"] = mode == FracMode::exact ? "exact" : "brute";
    j["value"] = r.infinite ? std::string("infinite") : to_string(r.value);
    j["witness_vertices"] = r.witness;
    if (mode == FracMode::exact) j["iterations"] = r.iterations;
    return j;
}

Json partition_json(const PartitionResult& r, int k) {
    Json j = header("partition");
    j["k"] = k;
    if (r.ok()) {
        Json forests = Json::array();
        for (const auto& f : r.forests) forests.push_back(to_json(f));
        j["forests"] = std::move(forests);
    } else {
        j["violation"] = to_json(*r.violation);
    }
    return j;
}

Json decomposition_json(const SearchOutcome& outcome, int k, int d, RemainderKind kind) {
    Json j = header("decomposition");
    j["k"] = k;
    j["d"] = kind == RemainderKind::matching ? 1 : d;
    j["kind"] = std::string(to_string(kind));
    j["status"] = outcome.exhausted() ? "exhausted" : "ok";
    Json forests = Json::array();
    Json remainder = Json::array();
    if (outcome.decomposition) {
        for (const auto& f : outcome.decomposition->forests) forests.push_back(to_json(f));
        remainder = to_json(outcome.decomposition->remainder);
    }
    j["forests"] = std::move(forests);
    j["remainder"] = std::move(remainder);
    j["search_nodes"] = outcome.stats.nodes;
    return j;
}

Json domination_json(const DominationResult& r, bool two_path) {
    Json j = header("domination");
    j["kind"] = two_path ? "two-path" : "edge";
    if (r.infinite)
        j["value"] = "infinite";
    else
        j["value"] = r.value;
    if (two_path) {
        Json paths = Json::array();
        for (const TwoPath& p : r.two_paths)
            paths.push_back({{"edges", {p.first, p.second}},
                             {"vertices", {p.vertices[0], p.vertices[1], p.vertices[2]}}});
        j["witness"] = std::move(paths);
    } else {
        j["witness"] = r.edges;
    }
    return j;
}

Json prooftrace_json(const ProofTraceReport& r) {
    Json j = header("prooftrace");
    j["n"] = r.n;
    j["m"] = r.m;
    j["k"] = r.k;
    j["bound"] = to_string(r.bound);
    j["frac_arboricity"] = r.frac_infinite ? std::string("infinite") : to_string(r.frac_arboricity);
    j["hypothesis"] = r.hypothesis;
    j["flats_of_n"] = r.flats_of_n;
    Json flats = Json::array();
    for (const FlatRecord& f : r.flats) {
        Json rec;
        rec["complement"] = to_json(f.complement);
        rec["min_degree"] = f.min_degree;
        rec["mindeg_ok"] = f.mindeg_ok;
        if (f.gamma_p.infinite)
            rec["gamma_p"] = "infinite";
        else
            rec["gamma_p"] = f.gamma_p.value;
        rec["eta_lower_bound"] = rec["gamma_p"];
        rec["required"] = f.required;
        rec["inters_ok"] = f.inters_ok;
        flats.push_back(std::move(rec));
    }
    j["flats"] = std::move(flats);
    j["link"] = {{"cover_exists", r.link.cover_exists}, {"matching_base_exists", r.link.matching_base_exists}};
    j["link_ok"] = r.link_ok;
    j["basic_obs_ok"] = r.basic_obs_ok;
    j["mindeg_ok"] = r.mindeg_ok;
    j["inters_ok"] = r.inters_ok;
    j["inters_label"] = r.inters_ok ? "sufficient condition verified" : "sufficient condition not verified";
    j["verdict"] = std::string(to_string(r.verdict));
    return j;
}

Decomposition decomposition_from_json(const Json& j, std::size_t host_size) {
    if (!j.contains("forests") || !j["forests"].is_array()) throw Error("decomposition needs a 'forests' array");
    Decomposition dec;
    for (const auto& f : j["forests"]) dec.forests.push_back(edge_subset_from_json(f, host_size));
    dec.remainder = j.contains("remainder") ? edge_subset_from_json(j["remainder"], host_size) : EdgeSubset(host_size);
    dec.kind = j.contains("kind") ? parse_remainder_kind(j["kind"].get<std::string>()) : RemainderKind::matching;
    return dec;
}

}  // namespace arborkit
