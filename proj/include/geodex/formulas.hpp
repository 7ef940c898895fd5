#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geodex/trees.hpp"
#include "geodex/vertex_set.hpp"

namespace geodex {

enum class FormulaCase {
    diam2,
    diam3,
    diam4_center_below_max,
    diam4_center_at_max,
    diam_ge5,
    disconnected,
};
std::string to_string(FormulaCase c);

// One candidate lower bound entering a max, labeled by the witness
// construction it comes from.
struct FormulaTerm {
    std::string label;
    int value = 0;
};

struct FormulaVerdict {
    FormulaCase tag = FormulaCase::diam2;
    int predicted = 0;  // max over terms
    std::vector<FormulaTerm> terms;
};

// Closed-form con(TT~) for a tree on at least three vertices, dispatched on
// the diameter class:
//   diam >= 5               max{n, 2*maxdeg + 1}
//   diam == 4, deg(c) < maxdeg   n + maxdeg - 1
//   diam == 4, deg(c) = maxdeg   max{n + maxdeg_off_center - 1, 2*maxdeg + 1,
//                                    n + 2*e(c) - maxdeg + 1}
//   diam == 3               n + maxdeg - 1
//   diam == 2               2n - 1
FormulaVerdict predict_tree_prism(const TreeSpec& t);

// con(GG~) for a disconnected G: 2n - k with k the order of a minimum
// component. Rejects connected input.
FormulaVerdict predict_disconnected_prism(const Graph& g);

// Convex set of size 2*deg(x)+1 in the prism: the closed neighborhood of x
// on the tree side plus the mirror of its open neighborhood. Coordinates are
// prism coordinates (mirror of v is v + n).
VertexSet star_mirror_witness(const TreeSpec& t, int x);

// Convex set of size n - deg(w) + 2*e(w) + 1 in the prism, for a non-pendant
// w in a tree of diameter at most 4: w with its pendant neighbors on the tree
// side, plus the whole mirror side minus the mirrors of w's non-pendant
// neighbors.
VertexSet leaf_complement_witness(const TreeSpec& t, int w);

struct HullCheckEntry {
    std::string name;
    bool applicable = false;
    std::uint64_t tuples = 0;
    std::uint64_t failures = 0;
};

// Closure containment checks over the structural vertex tuples of t, one
// entry per check; inapplicable diameters are reported with applicable=false.
std::vector<HullCheckEntry> hull_containment_checks(const TreeSpec& t);

}  // namespace geodex
