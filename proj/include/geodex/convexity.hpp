#pragma once

#include <cstdint>
#include <vector>

#include "geodex/distance.hpp"
#include "geodex/vertex_set.hpp"

namespace geodex {

// Geodesic interval masks I[u,v] for every vertex pair, one word per pair.
// w lies in I[u,v] exactly when d(u,w) + d(w,v) = d(u,v). Requires at most
// VertexSet::max_vertices vertices; immutable once built.
class IntervalTable {
public:
    explicit IntervalTable(const DistanceMatrix& dm);

    int vertex_count() const { return n_; }
    VertexSet full() const { return VertexSet::full(n_); }
    VertexSet between(int u, int v) const {
        return VertexSet::from_word(
            masks_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                   static_cast<std::size_t>(v)]);
    }

    // I[S]: union of I[u,v] over all pairs of S. Superset of S when S != {}.
    VertexSet expand(VertexSet s) const;

    bool convex(VertexSet s) const;

    // Least convex superset of s (fixpoint of expand).
    VertexSet closure(VertexSet s) const;

    // closure(s | {u}) for an s that is already closed; cheaper than
    // re-closing from scratch.
    VertexSet close_with(VertexSet s, int u) const;

    bool hull_set(VertexSet s) const { return closure(s) == full(); }

private:
    int n_;
    std::vector<VertexSet::word_type> masks_;  // n*n, symmetric, diagonal = singletons
};

VertexSet interval(const DistanceMatrix& dm, int u, int v);
VertexSet interval_of_set(const DistanceMatrix& dm, VertexSet s);
bool is_convex(const DistanceMatrix& dm, VertexSet s);
VertexSet convex_closure(const DistanceMatrix& dm, VertexSet s);
bool is_hull_set(const DistanceMatrix& dm, VertexSet s);

struct ConvexityResult {
    int value = 0;          // con(G): size of a maximum proper convex set
    VertexSet witness;      // lexicographically smallest maximum witness
    std::uint64_t explored = 0;
    double elapsed_ms = 0.0;
};

// Exact con(G) by descending-cardinality subset enumeration. Candidates are
// walked in increasing word order within each cardinality, so the returned
// witness is deterministic; supersets of known hulling pairs are skipped.
ConvexityResult convexity_number_exhaustive(const DistanceMatrix& dm);

// Exact con(G) by branch and bound: for each forbidden vertex, grow closed
// sets one chosen vertex at a time, pruning branches whose closure reaches
// the forbidden vertex or whose remaining candidates cannot beat the best.
ConvexityResult convexity_number_bnb(const DistanceMatrix& dm);

}  // namespace geodex
