#include "equispec/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace equispec {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges, std::string family, std::map<std::string, double> params)
    : n_(n), adj_(n), family_(std::move(family)), params_(std::move(params)) {
    if (n_ == 0) throw Error(ErrorCode::InvalidParams, "graph needs at least one vertex");
    for (auto [a, b] : edges) {
        if (a >= n_ || b >= n_) throw Error(ErrorCode::InvalidParams, "edge endpoint out of range");
        if (a == b) throw Error(ErrorCode::InvalidParams, "loop at vertex " + std::to_string(a + 1));
        if (a > b) std::swap(a, b);
        edges_.emplace_back(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw Error(ErrorCode::InvalidParams, "duplicate edge");
    }
    for (auto [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
    for (std::size_t v = 0; v < n_; ++v) labels_.push_back(std::to_string(v + 1));
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (labels.size() != n_) throw Error(ErrorCode::InvalidParams, "one label per vertex required");
    labels_ = std::move(labels);
}

bool Graph::connected() const {
    const auto dist = all_pairs_distances(adj_, Execution::serial);
    return std::none_of(dist[0].begin(), dist[0].end(), [](int d) { return d == kUnreachable; });
}

namespace {

void require_min(int value, int bound, const char* name) {
    if (value < bound) {
        throw Error(ErrorCode::InvalidParams,
                    std::string(name) + " must be at least " + std::to_string(bound) + ", got " + std::to_string(value));
    }
}

int int_param(const std::map<std::string, double>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw Error(ErrorCode::InvalidParams, "missing parameter '" + key + "'");
    if (it->second != std::floor(it->second) || std::abs(it->second) > 1e6) {
        throw Error(ErrorCode::InvalidParams, "parameter '" + key + "' must be an integer");
    }
    return static_cast<int>(it->second);
}

bool is_distance_kind(GraphMatrixKind k) {
    return k == GraphMatrixKind::distance || k == GraphMatrixKind::distance_laplacian ||
           k == GraphMatrixKind::distance_signless_laplacian;
}

}  // namespace

Graph pendant_k3(int a) {
    require_min(a, 2, "a");
    const auto count = static_cast<std::size_t>(a);
    const std::size_t u = 0, v = 1, w = 2, b = 3 + count;
    std::vector<Graph::Edge> edges{{u, v}, {v, w}, {u, w}, {v, b}};
    std::vector<std::string> labels{"u", "v", "w"};
    for (std::size_t i = 0; i < count; ++i) {
        edges.emplace_back(u, 3 + i);
        labels.push_back("a" + std::to_string(i + 1));
    }
    labels.push_back("b");
    Graph g(count + 4, edges, "pendant_k3", {{"a", a}});
    g.set_labels(std::move(labels));
    return g;
}

Graph complete_graph(int n) {
    require_min(n, 1, "n");
    const auto size = static_cast<std::size_t>(n);
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j) edges.emplace_back(i, j);
    return Graph(size, edges, "complete", {{"n", n}});
}

Graph complete_bipartite(int a, int b) {
    require_min(a, 1, "a");
    require_min(b, 1, "b");
    const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 0; i < ua; ++i)
        for (std::size_t j = 0; j < ub; ++j) edges.emplace_back(i, ua + j);
    return Graph(ua + ub, edges, "complete_bipartite", {{"a", a}, {"b", b}});
}

Graph complete_split(int omega, int alpha) {
    require_min(omega, 1, "omega");
    require_min(alpha, 1, "alpha");
    const auto uw = static_cast<std::size_t>(omega), ua = static_cast<std::size_t>(alpha);
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 0; i < uw; ++i) {
        for (std::size_t j = i + 1; j < uw; ++j) edges.emplace_back(i, j);
        for (std::size_t j = 0; j < ua; ++j) edges.emplace_back(i, uw + j);
    }
    return Graph(uw + ua, edges, "complete_split", {{"omega", omega}, {"alpha", alpha}});
}

Graph build_graph(const std::string& family, const std::map<std::string, double>& params) {
    auto check_keys = [&](std::initializer_list<const char*> keys) {
        for (const auto& [k, v] : params)
            if (std::none_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; }))
                throw Error(ErrorCode::InvalidParams, "unknown parameter '" + k + "' for " + family);
    };
    if (family == "pendant_k3") {
        check_keys({"a"});
        return pendant_k3(int_param(params, "a"));
    }
    if (family == "complete") {
        check_keys({"n"});
        return complete_graph(int_param(params, "n"));
    }
    if (family == "complete_bipartite") {
        check_keys({"a", "b"});
        return complete_bipartite(int_param(params, "a"), int_param(params, "b"));
    }
    if (family == "complete_split") {
        check_keys({"omega", "alpha"});
        return complete_split(int_param(params, "omega"), int_param(params, "alpha"));
    }
    throw Error(ErrorCode::InvalidParams, "unknown graph family '" + family + "'");
}

Graph parse_edge_list(std::istream& in) {
    std::vector<Graph::Edge> edges;
    std::size_t n = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::vector<std::string> tokens;
        for (std::string t; is >> t;) tokens.push_back(t);
        if (tokens.empty()) continue;
        if (tokens.size() != 2) throw ParseError(line_no, "expected two vertex indices");
        std::size_t ends[2];
        for (int k = 0; k < 2; ++k) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(tokens[static_cast<std::size_t>(k)], &used);
            } catch (const std::exception&) {
                throw ParseError(line_no, "bad vertex index '" + tokens[static_cast<std::size_t>(k)] + "'");
            }
            if (used != tokens[static_cast<std::size_t>(k)].size() || v < 1) {
                throw ParseError(line_no, "bad vertex index '" + tokens[static_cast<std::size_t>(k)] + "'");
            }
            ends[k] = static_cast<std::size_t>(v - 1);
        }
        if (ends[0] == ends[1]) throw ParseError(line_no, "loop edge");
        n = std::max({n, ends[0] + 1, ends[1] + 1});
        edges.emplace_back(ends[0], ends[1]);
    }
    if (n == 0) throw ParseError(0, "edge list is empty");
    try {
        return Graph(n, edges);
    } catch (const Error& e) {
        throw ParseError(0, e.what());
    }
}

std::vector<WeightFunction> weight_presets() {
    return {
        {"unit", [](double, double) { return 1.0; }},
        {"zagreb1", [](double x, double y) { return x + y; }},
        {"sombor", [](double x, double y) { return std::sqrt(x * x + y * y); }},
        {"geometric_arithmetic", [](double x, double y) { return 2.0 * std::sqrt(x * y) / (x + y); }},
        {"abc", [](double x, double y) { return std::sqrt((x + y - 2.0) / (x * y)); }},
    };
}

WeightFunction weight_preset(const std::string& name) {
    for (auto& w : weight_presets())
        if (w.name == name) return w;
    throw Error(ErrorCode::InvalidParams, "unknown weight preset '" + name + "'");
}

std::string_view to_string(GraphMatrixKind kind) noexcept {
    switch (kind) {
        case GraphMatrixKind::adjacency: return "adjacency";
        case GraphMatrixKind::weighted_adjacency: return "weighted_adjacency";
        case GraphMatrixKind::laplacian: return "laplacian";
        case GraphMatrixKind::signless_laplacian: return "signless_laplacian";
        case GraphMatrixKind::distance: return "distance";
        case GraphMatrixKind::distance_laplacian: return "distance_laplacian";
        case GraphMatrixKind::distance_signless_laplacian: return "distance_signless_laplacian";
    }
    return "unknown";
}

GraphMatrixKind parse_matrix_kind(const std::string& name) {
    for (auto k : {GraphMatrixKind::adjacency, GraphMatrixKind::weighted_adjacency, GraphMatrixKind::laplacian,
                   GraphMatrixKind::signless_laplacian, GraphMatrixKind::distance, GraphMatrixKind::distance_laplacian,
                   GraphMatrixKind::distance_signless_laplacian})
        if (to_string(k) == name) return k;
    throw Error(ErrorCode::InvalidParams, "unknown matrix kind '" + name + "'");
}

std::vector<std::vector<int>> distance_table(const Graph& g, Execution exec) {
    auto dist = all_pairs_distances(g.neighbours(), exec);
    for (const auto& row : dist)
        if (std::find(row.begin(), row.end(), kUnreachable) != row.end())
            throw Error(ErrorCode::Disconnected, "distance matrices need a connected graph");
    return dist;
}

Matrix graph_matrix(const Graph& g, GraphMatrixKind kind, const std::optional<WeightFunction>& phi, Execution exec) {
    const std::size_t n = g.order();
    Matrix m(n, n);
    if (is_distance_kind(kind)) {
        const auto dist = distance_table(g, exec);
        for (std::size_t i = 0; i < n; ++i) {
            double transmission = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = dist[i][j];
                transmission += dist[i][j];
            }
            if (kind == GraphMatrixKind::distance) continue;
            const double sign = kind == GraphMatrixKind::distance_laplacian ? -1.0 : 1.0;
            for (std::size_t j = 0; j < n; ++j) m(i, j) *= sign;
            m(i, i) = transmission;
        }
        return m;
    }
    if (kind == GraphMatrixKind::weighted_adjacency && !phi) {
        throw Error(ErrorCode::MissingPhi, "weighted_adjacency needs a weight function");
    }
    for (auto [a, b] : g.edges()) {
        double w = 1.0;
        if (kind == GraphMatrixKind::weighted_adjacency) {
            w = phi->rule(static_cast<double>(g.degree(a)), static_cast<double>(g.degree(b)));
        } else if (kind == GraphMatrixKind::laplacian) {
            w = -1.0;
        }
        m(a, b) = m(b, a) = w;
    }
    if (kind == GraphMatrixKind::laplacian || kind == GraphMatrixKind::signless_laplacian) {
        for (std::size_t v = 0; v < n; ++v) m(v, v) = static_cast<double>(g.degree(v));
    }
    return m;
}

Partition designated_partition(const Graph& g) {
    const std::size_t n = g.order();
    auto range = [](std::size_t from, std::size_t to) {
        Partition::Cell c;
        for (std::size_t i = from; i < to; ++i) c.push_back(i);
        return c;
    };
    const auto& f = g.family();
    if (f == "pendant_k3") return Partition(n, {{0}, {1}, {2}, range(3, n - 1), {n - 1}});
    if (f == "complete") return Partition::trivial(n);
    if (f == "complete_bipartite") {
        const auto a = static_cast<std::size_t>(g.params().at("a"));
        return Partition(n, {range(0, a), range(a, n)});
    }
    if (f == "complete_split") {
        const auto omega = static_cast<std::size_t>(g.params().at("omega"));
        return Partition(n, {range(0, omega), range(omega, n)});
    }
    throw Error(ErrorCode::NoDesignatedPartition,
                "no designated partition for a " + f + " graph; refine from the trivial partition instead");
}

}  // namespace equispec
