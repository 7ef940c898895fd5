#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace geodex {

// Simple undirected graph on vertices 0..n-1, immutable once built.
//
// A prism-tagged graph additionally records that vertices 0..base-1 carry the
// original graph, vertices base..2*base-1 its complement, and that v is
// matched with its mirror v + base. All prism-aware code uses that arithmetic
// rather than a lookup table.
class Graph {
public:
    enum class Kind { plain, prism };

    Graph() = default;  // the empty graph

    // Builds a plain graph; duplicate edges collapse. Rejects out-of-range
    // endpoints and self-loops.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }
    Kind kind() const { return kind_; }
    int prism_base() const { return base_; }  // meaningful only when kind() == prism

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    std::size_t m_ = 0;
    Kind kind_ = Kind::plain;
    int base_ = 0;
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists

    friend Graph complementary_prism(const Graph& g);
};

// Edge uv present iff absent in g. Rejects prism-tagged inputs (the tag would
// be meaningless on the result).
Graph complement(const Graph& g);

// Disjoint union of g and complement(g) plus the perfect matching (v, v+n).
// The result has C(n,2) + n edges and is tagged prism(n).
Graph complementary_prism(const Graph& g);

bool is_connected(const Graph& g);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

struct DegreeStats {
    int max_degree = 0;
    std::vector<int> degree;
    std::vector<int> pendants;  // vertices of degree 1, ascending
};

DegreeStats degree_stats(const Graph& g);

// Number of degree-1 neighbors of x.
int pendant_neighbor_count(const Graph& g, int x);

// Max degree over all vertices other than x; degrees are measured in g
// itself, not in the vertex-deleted subgraph. Requires n >= 2.
int max_degree_excluding(const Graph& g, int x);

// True iff the closed neighborhood of v induces a clique.
bool is_extreme(const Graph& g, int v);

}  // namespace geodex
