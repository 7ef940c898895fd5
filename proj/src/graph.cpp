#include "geodex/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace geodex {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    std::vector<std::pair<int, int>> norm;
    norm.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge " + edge_str(u, v) +
                                        " out of range for n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    for (auto [u, v] : norm) {
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.m_ = norm.size();
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph complement(const Graph& g) {
    if (g.kind() != Graph::Kind::plain)
        throw std::invalid_argument("complement: prism-tagged input has no meaningful complement");
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph complementary_prism(const Graph& g) {
    if (g.kind() != Graph::Kind::plain)
        throw std::invalid_argument("complementary_prism: input must be a plain graph");
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("complementary_prism: need at least one vertex");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v))
                edges.emplace_back(u, v);
            else
                edges.emplace_back(u + n, v + n);
        }
        edges.emplace_back(u, u + n);  // the matching edge v -- v+n
    }
    Graph p = Graph::from_edges(2 * n, edges);
    p.kind_ = Graph::Kind::prism;
    p.base_ = n;
    return p;
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        const int id = static_cast<int>(out.size());
        std::vector<int> stack{s}, verts;
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            verts.push_back(v);
            for (int u : g.neighbors(v)) {
                if (comp[static_cast<std::size_t>(u)] == -1) {
                    comp[static_cast<std::size_t>(u)] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || components(g).size() == 1;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    const int n = g.vertex_count();
    s.degree.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        s.degree[static_cast<std::size_t>(v)] = d;
        s.max_degree = std::max(s.max_degree, d);
        if (d == 1) s.pendants.push_back(v);
    }
    return s;
}

int pendant_neighbor_count(const Graph& g, int x) {
    if (x < 0 || x >= g.vertex_count())
        throw std::invalid_argument("pendant_neighbor_count: vertex " + std::to_string(x) +
                                    " out of range");
    int count = 0;
    for (int y : g.neighbors(x))
        if (g.degree(y) == 1) ++count;
    return count;
}

int max_degree_excluding(const Graph& g, int x) {
    const int n = g.vertex_count();
    if (n < 2) throw std::domain_error("max_degree_excluding: need at least two vertices");
    if (x < 0 || x >= n)
        throw std::invalid_argument("max_degree_excluding: vertex " + std::to_string(x) +
                                    " out of range");
    int best = 0;
    for (int y = 0; y < n; ++y)
        if (y != x) best = std::max(best, g.degree(y));
    return best;
}

bool is_extreme(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) return false;
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j])) return false;
    return true;
}

}  // namespace geodex
