#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equispec/kernels.hpp"
#include "equispec/partition.hpp"

namespace equispec {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    Graph() = default;
    /// Throws InvalidParams on loops, duplicate edges or out-of-range endpoints.
    Graph(std::size_t n, const std::vector<Edge>& edges, std::string family = "custom",
          std::map<std::string, double> params = {});

    std::size_t order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    /// Edges with first < second, sorted.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::vector<std::size_t>>& neighbours() const noexcept { return adj_; }
    std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
    const std::string& family() const noexcept { return family_; }
    const std::map<std::string, double>& params() const noexcept { return params_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::string> labels);

    bool connected() const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adj_;
    std::string family_;
    std::map<std::string, double> params_;
    std::vector<std::string> labels_;
};

/// Triangle u, v, w with `a` pendants on u and one on v; order u, v, w, a1..aa, b.
Graph pendant_k3(int a);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
/// Clique on the first omega vertices, joined to alpha independent vertices.
Graph complete_split(int omega, int alpha);

/// Family names: pendant_k3 (a), complete (n), complete_bipartite (a, b), complete_split (omega, alpha).
Graph build_graph(const std::string& family, const std::map<std::string, double>& params);

/// "i j" per line, 1-based; '#' comments and blank lines skipped. Throws ParseError.
Graph parse_edge_list(std::istream& in);

struct WeightFunction {
    std::string name;
    std::function<double(double, double)> rule;
};

std::vector<WeightFunction> weight_presets();
/// Throws InvalidParams for an unknown name.
WeightFunction weight_preset(const std::string& name);

enum class GraphMatrixKind {
    adjacency,
    weighted_adjacency,
    laplacian,
    signless_laplacian,
    distance,
    distance_laplacian,
    distance_signless_laplacian,
};

std::string_view to_string(GraphMatrixKind kind) noexcept;
/// Throws InvalidParams for an unknown name.
GraphMatrixKind parse_matrix_kind(const std::string& name);

/// Distance kinds throw Disconnected; weighted_adjacency without phi throws MissingPhi.
Matrix graph_matrix(const Graph& g, GraphMatrixKind kind, const std::optional<WeightFunction>& phi = std::nullopt,
                    Execution exec = Execution::parallel);

/// BFS distances; throws Disconnected.
std::vector<std::vector<int>> distance_table(const Graph& g, Execution exec = Execution::parallel);

/// The family's designated partition. Throws NoDesignatedPartition for custom graphs.
Partition designated_partition(const Graph& g);

}  // namespace equispec
