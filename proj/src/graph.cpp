#include "gsu/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gsu {

namespace {

std::pair<int, int> key_of(const Edge& e, bool directed) {
    if (directed || e.u < e.v) return {e.u, e.v};
    return {e.v, e.u};
}

std::string fmt_weight(double w) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", w);
    return buf;
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges, bool directed)
    : n_(n), edges_(std::move(edges)), directed_(directed) {
    if (n_ < 1) throw std::invalid_argument("graph: vertex count must be >= 1");
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw std::invalid_argument("graph: vertex index out of range");
        if (e.u == e.v) throw std::invalid_argument("graph: self-loop rejected");
        if (!std::isfinite(e.w)) throw std::invalid_argument("graph: non-finite weight");
        if (e.w == 0.0)
            throw std::invalid_argument("graph: zero weight means not connected");
        if (!seen.insert(key_of(e, directed_)).second)
            throw std::invalid_argument("graph: duplicate edge");
    }
}

Graph Graph::from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    bool directed = false;
    bool header_window = true;  // "directed" may only follow the count line
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank or comment-only
        if (n < 0) {
            try {
                size_t pos = 0;
                n = std::stoi(first, &pos);
                if (pos != first.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                            ": expected vertex count");
            }
            std::string extra;
            if (ls >> extra)
                throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                            ": trailing tokens after vertex count");
            continue;
        }
        if (header_window && first == "directed") {
            directed = true;
            header_window = false;
            continue;
        }
        header_window = false;
        Edge e;
        std::istringstream es(line);
        if (!(es >> e.u >> e.v >> e.w))
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": expected \"u v w\"");
        std::string extra;
        if (es >> extra)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": trailing tokens");
        edges.push_back(e);
    }
    if (n < 0) throw std::invalid_argument("edge list: missing vertex count");
    try {
        return Graph(n, std::move(edges), directed);
    } catch (const std::invalid_argument& ex) {
        throw std::invalid_argument(std::string("edge list: ") + ex.what());
    }
}

Graph Graph::ring(int n, bool directed) {
    if (n < 3) throw std::invalid_argument("ring: n must be >= 3");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
    return Graph(n, std::move(edges), directed);
}

Graph Graph::with_chord(int u, int v, double w) const {
    std::vector<Edge> edges = edges_;
    edges.push_back({u, v, w});
    return Graph(n_, std::move(edges), directed_);
}

Graph Graph::random(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random graph: n must be >= 1");
    if (!(p > 0.0 && p <= 1.0))
        throw std::invalid_argument("random graph: p must be in (0, 1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    constexpr int kRetries = 200;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) edges.push_back({u, v, 1.0});
        Graph g(n, std::move(edges), false);
        if (g.is_connected()) return g;
    }
    throw std::runtime_error("random graph: connectivity not achieved within retry budget");
}

bool Graph::is_connected() const {
    if (n_ == 1) return true;
    std::vector<std::vector<int>> adj(n_);
    for (const Edge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);  // connectivity in the underlying undirected sense
    }
    std::vector<char> visited(n_, 0);
    std::queue<int> q;
    q.push(0);
    visited[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (!visited[v]) {
                visited[v] = 1;
                ++count;
                q.push(v);
            }
    }
    return count == n_;
}

Eigen::MatrixXd Graph::weight_matrix() const {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n_, n_);
    for (const Edge& e : edges_) {
        w(e.u, e.v) = e.w;
        if (!directed_) w(e.v, e.u) = e.w;
    }
    return w;
}

Eigen::MatrixXd Graph::adjacency() const {
    Eigen::MatrixXd a = weight_matrix();
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (a(i, j) != 0.0) a(i, j) = 1.0;
    return a;
}

Eigen::MatrixXd Graph::degree() const {
    Eigen::MatrixXd w = weight_matrix();
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n_, n_);
    d.diagonal() = w.rowwise().sum();
    return d;
}

Eigen::MatrixXd Graph::laplacian() const {
    Eigen::MatrixXd w = weight_matrix();
    Eigen::MatrixXd l = -w;
    l.diagonal() += w.rowwise().sum();
    return l;
}

std::string Graph::to_edge_list() const {
    std::string out = std::to_string(n_) + "\n";
    if (directed_) out += "directed\n";
    for (const Edge& e : edges_) {
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + fmt_weight(e.w) + "\n";
    }
    return out;
}

}  // namespace gsu
