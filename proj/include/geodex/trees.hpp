#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geodex/graph.hpp"

namespace geodex {

// A tree together with the cached metric facts the formula dispatch needs.
struct TreeSpec {
    Graph graph;
    std::optional<std::vector<int>> prufer;  // set when built from a code
    int diameter = 0;
    int radius = 0;
    int max_degree = 0;
    std::vector<int> centers;            // one vertex (even diameter) or two adjacent ones
    std::optional<int> even_center;      // the unique center, when the diameter is even
    std::vector<int> pendant_count;      // e(x): number of degree-1 neighbors, per vertex
};

// Validates the tree certificate (connected, n-1 edges) and fills the caches.
TreeSpec tree_from_graph(Graph g);
TreeSpec tree_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// The unique labeled tree on code.size()+2 vertices with this code.
TreeSpec prufer_decode(const std::vector<int>& code);
// Inverse of prufer_decode: repeatedly removes the smallest leaf. n >= 2.
std::vector<int> prufer_encode(const Graph& tree);

// AHU encoding rooted at the center; bicentral trees take the smaller of the
// two central-edge orientations. Equal codes <=> isomorphic trees.
std::string canonical_code(const Graph& tree);

// One representative per isomorphism class, in a deterministic order.
// 1 <= n <= 12.
std::vector<TreeSpec> enumerate_free_trees(int n);

// Named families. Labeling: hub/spine first, then attachments in order.
TreeSpec path_tree(int n);
TreeSpec star_tree(int leaves);                 // hub 0, leaves 1..leaves
TreeSpec double_star_tree(int a, int b);        // centers 0,1; a leaves on 0, b on 1
TreeSpec spider_tree(int arms, int tips_per_arm);  // center 0, arm vertices 1..arms,
                                                   // each with tips_per_arm pendant tips
TreeSpec caterpillar_tree(int spine, const std::vector<int>& leaf_counts);

enum class DiamClass { two, three, four, five_plus };
std::string to_string(DiamClass c);

// The diameter-class facts driving the closed-form dispatch; the center
// fields are populated exactly when the diameter is 2 or 4.
struct Classification {
    DiamClass diam_class = DiamClass::two;
    int max_degree = 0;
    std::optional<int> center;
    std::optional<int> center_degree;
    std::optional<int> center_pendant;        // e(center)
    std::optional<int> max_degree_off_center; // max degree over vertices != center
};

Classification classify(const TreeSpec& t);  // requires n >= 3

}  // namespace geodex
