#include "arborkit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace arborkit {

ParseError::ParseError(int line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

SizeLimitError::SizeLimitError(std::string_view operation, std::size_t size, std::size_t limit)
    : Error(std::string(operation) + ": size " + std::to_string(size) +
            " exceeds desk-scale limit " + std::to_string(limit) +
            " (set ARBORKIT_MAX_EDGES to override)") {}

// ---------------------------------------------------------------- Graph

Graph::Graph(int vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count < 0) throw Error("negative vertex count");
}

Graph::Graph(int vertex_count, std::vector<Edge> edges) : Graph(vertex_count) {
    edges_.reserve(edges.size());
    for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(vertex_count) {
    for (auto [u, v] : edges) add_edge(u, v);
}

EdgeId Graph::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
        throw Error("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    edges_.push_back({u, v});
    return edge_count() - 1;
}

std::vector<std::vector<EdgeId>> Graph::incidence() const {
    std::vector<std::vector<EdgeId>> inc(static_cast<std::size_t>(vertex_count_));
    for (EdgeId e = 0; e < edge_count(); ++e) {
        const Edge& ed = edges_[static_cast<std::size_t>(e)];
        inc[static_cast<std::size_t>(ed.u)].push_back(e);
        if (!ed.is_loop()) inc[static_cast<std::size_t>(ed.v)].push_back(e);
    }
    return inc;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(vertex_count_), 0);
    for (const Edge& e : edges_) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    return deg;
}

bool Graph::has_loop() const noexcept {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

// ----------------------------------------------------------- EdgeSubset

EdgeSubset::EdgeSubset(std::size_t host_size) : bits_(host_size) {}

EdgeSubset::EdgeSubset(std::size_t host_size, std::initializer_list<EdgeId> ids) : bits_(host_size) {
    for (EdgeId e : ids) insert(e);
}

EdgeSubset::EdgeSubset(std::size_t host_size, const std::vector<EdgeId>& ids) : bits_(host_size) {
    for (EdgeId e : ids) insert(e);
}

EdgeSubset EdgeSubset::full(std::size_t host_size) {
    EdgeSubset s(host_size);
    s.bits_.set();
    return s;
}

EdgeSubset EdgeSubset::from_mask(std::size_t host_size, std::uint64_t mask) {
    if (host_size > 64) throw Error("EdgeSubset::from_mask: host larger than 64 edges");
    EdgeSubset s(host_size);
    for (std::size_t i = 0; i < host_size; ++i)
        if ((mask >> i) & 1U) s.bits_.set(i);
    return s;
}

void EdgeSubset::check(EdgeId e) const {
    if (e < 0 || static_cast<std::size_t>(e) >= bits_.size())
        throw Error("edge id " + std::to_string(e) + " out of range for host with " +
                    std::to_string(bits_.size()) + " edges");
}

void EdgeSubset::check_host(const EdgeSubset& other) const {
    if (other.bits_.size() != bits_.size()) throw Error("edge subsets over different hosts");
}

bool EdgeSubset::contains(EdgeId e) const {
    check(e);
    return bits_.test(static_cast<std::size_t>(e));
}

void EdgeSubset::insert(EdgeId e) {
    check(e);
    bits_.set(static_cast<std::size_t>(e));
}

void EdgeSubset::erase(EdgeId e) {
    check(e);
    bits_.reset(static_cast<std::size_t>(e));
}

std::vector<EdgeId> EdgeSubset::ids() const {
    std::vector<EdgeId> out;
    out.reserve(bits_.count());
    for (auto i = bits_.find_first(); i != decltype(bits_)::npos; i = bits_.find_next(i))
        out.push_back(static_cast<EdgeId>(i));
    return out;
}

std::uint64_t EdgeSubset::to_mask() const {
    if (bits_.size() > 64) throw Error("EdgeSubset::to_mask: host larger than 64 edges");
    std::uint64_t mask = 0;
    for (auto i = bits_.find_first(); i != decltype(bits_)::npos; i = bits_.find_next(i))
        mask |= std::uint64_t{1} << i;
    return mask;
}

EdgeSubset EdgeSubset::complement() const {
    EdgeSubset s = *this;
    s.bits_.flip();
    return s;
}

EdgeSubset& EdgeSubset::operator|=(const EdgeSubset& other) {
    check_host(other);
    bits_ |= other.bits_;
    return *this;
}

EdgeSubset& EdgeSubset::operator&=(const EdgeSubset& other) {
    check_host(other);
    bits_ &= other.bits_;
    return *this;
}

EdgeSubset& EdgeSubset::operator-=(const EdgeSubset& other) {
    check_host(other);
    bits_ -= other.bits_;
    return *this;
}

bool EdgeSubset::is_subset_of(const EdgeSubset& other) const {
    check_host(other);
    return bits_.is_subset_of(other.bits_);
}

bool EdgeSubset::intersects(const EdgeSubset& other) const {
    check_host(other);
    return bits_.intersects(other.bits_);
}

bool operator<(const EdgeSubset& a, const EdgeSubset& b) {
    if (a.bits_.size() != b.bits_.size()) return a.bits_.size() < b.bits_.size();
    return a.bits_ < b.bits_;
}

// ------------------------------------------------------------ UnionFind

UnionFind::UnionFind(int n)
    : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
        auto& p = parent_[static_cast<std::size_t>(x)];
        p = parent_[static_cast<std::size_t>(p)];
        x = p;
    }
    return x;
}

bool UnionFind::unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    --sets_;
    return true;
}

// ------------------------------------------------------------ subgraphs

void validate(const Graph& g, const EdgeSubset& x) {
    if (x.host_size() != static_cast<std::size_t>(g.edge_count()))
        throw Error("edge subset host size " + std::to_string(x.host_size()) +
                    " does not match graph with " + std::to_string(g.edge_count()) + " edges");
}

namespace {

GraphStats compute_stats(const Graph& h) {
    GraphStats st;
    st.vertex_count = h.vertex_count();
    if (h.edge_count() == 0) {
        st.component_count = h.vertex_count();
        return st;
    }
    UnionFind uf(h.vertex_count());
    std::vector<int> deg = h.degrees();
    for (const Edge& e : h.edges()) {
        if (!uf.unite(e.u, e.v)) st.is_forest = false;
        if (e.is_loop()) st.is_matching = false;
    }
    st.component_count = uf.set_count();
    st.min_degree = *std::min_element(deg.begin(), deg.end());
    for (int d : deg)
        if (d > 1) st.is_matching = false;
    return st;
}

}  // namespace

InducedSubgraph edge_induced_subgraph(const Graph& g, const EdgeSubset& x) {
    validate(g, x);
    InducedSubgraph out;
    std::vector<Vertex> relabel(static_cast<std::size_t>(g.vertex_count()), -1);
    auto map_vertex = [&](Vertex v) {
        auto& slot = relabel[static_cast<std::size_t>(v)];
        if (slot < 0) {
            slot = static_cast<Vertex>(out.original_vertex.size());
            out.original_vertex.push_back(v);
        }
        return slot;
    };
    std::vector<Edge> edges;
    for (EdgeId e : x.ids()) {
        const Edge& ed = g.edge(e);
        Vertex a = map_vertex(ed.u);
        Vertex b = map_vertex(ed.v);
        edges.push_back({a, b});
        out.original_edge.push_back(e);
    }
    out.graph = Graph(static_cast<int>(out.original_vertex.size()), std::move(edges));
    out.stats = compute_stats(out.graph);
    return out;
}

GraphStats subset_stats(const Graph& g, const EdgeSubset& x) {
    return edge_induced_subgraph(g, x).stats;
}

InducedSubgraph vertex_induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
    InducedSubgraph out;
    std::vector<Vertex> relabel(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Vertex> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted) {
        if (v < 0 || v >= g.vertex_count()) throw Error("vertex out of range: " + std::to_string(v));
        relabel[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.original_vertex.size());
        out.original_vertex.push_back(v);
    }
    out.graph = Graph(static_cast<int>(sorted.size()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        Vertex a = relabel[static_cast<std::size_t>(ed.u)];
        Vertex b = relabel[static_cast<std::size_t>(ed.v)];
        if (a < 0 || b < 0) continue;
        out.graph.add_edge(a, b);
        out.original_edge.push_back(e);
    }
    out.stats = compute_stats(out.graph);
    return out;
}

Graph line_graph(const Graph& g) {
    Graph lg(g.edge_count());
    const auto& edges = g.edges();
    for (EdgeId a = 0; a < g.edge_count(); ++a) {
        for (EdgeId b = a + 1; b < g.edge_count(); ++b) {
            const Edge& ea = edges[static_cast<std::size_t>(a)];
            const Edge& eb = edges[static_cast<std::size_t>(b)];
            if (eb.touches(ea.u) || eb.touches(ea.v)) lg.add_edge(a, b);
        }
    }
    return lg;
}

int spanning_component_count(const Graph& g, const EdgeSubset& x) {
    validate(g, x);
    UnionFind uf(g.vertex_count());
    for (EdgeId e : x.ids()) uf.unite(g.edge(e).u, g.edge(e).v);
    return uf.set_count();
}

// -------------------------------------------------------------- file I/O

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view tok, int line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "non-integer token '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    Graph g;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        auto tokens = split_tokens(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        if (tokens.size() != 2)
            throw ParseError(line_no, have_header ? "expected 'u v'" : "malformed header, expected 'n m'");
        long long a = parse_int(tokens[0], line_no);
        long long b = parse_int(tokens[1], line_no);
        if (!have_header) {
            if (a < 0 || b < 0 || a > std::numeric_limits<int>::max() || b > std::numeric_limits<int>::max())
                throw ParseError(line_no, "malformed header, negative or oversized count");
            n = a;
            m = b;
            g = Graph(static_cast<int>(n));
            have_header = true;
        } else {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw ParseError(line_no, "vertex index out of range (n = " + std::to_string(n) + ")");
            if (g.edge_count() >= m)
                throw ParseError(line_no, "more edges than declared in header (" + std::to_string(m) + ")");
            g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
        }
        if (end == text.size()) break;
    }
    if (!have_header) throw ParseError(line_no, "malformed header, missing 'n m'");
    if (g.edge_count() != m)
        throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(g.edge_count()));
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::size_t desk_scale_limit(std::size_t fallback) {
    const char* env = std::getenv("ARBORKIT_MAX_EDGES");
    if (env == nullptr || *env == '\0') return fallback;
    std::size_t value = 0;
    std::string_view sv(env);
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (ec != std::errc() || ptr != sv.data() + sv.size())
        throw Error("ARBORKIT_MAX_EDGES must be a nonnegative integer");
    return value;
}

}  // namespace arborkit
