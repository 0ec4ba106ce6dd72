#ifndef GSU_GRAPH_HPP
#define GSU_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gsu {

struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;
};

/// Weighted graph without self-loops. Undirected edges are stored once per
/// unordered pair and expand symmetrically into the weight matrix.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges, bool directed = false);

    static Graph from_edge_list(const std::string& text);
    static Graph ring(int n, bool directed = false);
    static Graph random(int n, double p, std::uint64_t seed);

    /// Returns a copy of this graph with one extra edge.
    Graph with_chord(int u, int v, double w) const;

    int size() const { return n_; }
    bool directed() const { return directed_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool is_connected() const;

    Eigen::MatrixXd weight_matrix() const;
    Eigen::MatrixXd adjacency() const;
    Eigen::MatrixXd degree() const;
    /// L = D - W.
    Eigen::MatrixXd laplacian() const;

    std::string to_edge_list() const;

private:
    int n_;
    std::vector<Edge> edges_;
    bool directed_;
};

}  // namespace gsu

#endif
