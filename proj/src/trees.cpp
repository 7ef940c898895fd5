#include "geodex/trees.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "geodex/distance.hpp"

namespace geodex {

namespace {

// Centers by leaf peeling; works directly on adjacency lists.
std::vector<int> tree_centers(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 1) return {0};
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
        if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[static_cast<std::size_t>(v)] = 1;
            --remaining;
        }
        for (int v : layer)
            for (int u : adj[static_cast<std::size_t>(v)])
                if (!removed[static_cast<std::size_t>(u)] &&
                    --deg[static_cast<std::size_t>(u)] == 1)
                    next.push_back(u);
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[static_cast<std::size_t>(v)]) centers.push_back(v);
    return centers;
}

// (subtree size, encoding); children sorted ascending by that pair.
std::pair<int, std::string> rooted_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::pair<int, std::string>> kids;
    int size = 1;
    for (int u : adj[static_cast<std::size_t>(v)]) {
        if (u == parent) continue;
        auto k = rooted_code(adj, u, v);
        size += k.first;
        kids.push_back(std::move(k));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k.second;
    s += ")";
    return {size, std::move(s)};
}

std::vector<std::vector<int>> adjacency_of(const Graph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
    return adj;
}

std::vector<std::pair<int, int>> decode_edges(const std::vector<int>& code, int n) {
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int c : code) ++deg[static_cast<std::size_t>(c)];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    int ptr = 0;
    while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int c : code) {
        edges.emplace_back(leaf, c);
        if (--deg[static_cast<std::size_t>(c)] == 1 && c < ptr) {
            leaf = c;
        } else {
            ++ptr;
            while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return edges;
}

}  // namespace

TreeSpec tree_from_graph(Graph g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("tree: need at least one vertex");
    if (g.edge_count() != static_cast<std::size_t>(n - 1) || !is_connected(g))
        throw std::invalid_argument("tree: graph is not a tree (needs n-1 edges and connectivity)");
    TreeSpec t;
    t.pendant_count.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        t.max_degree = std::max(t.max_degree, g.degree(v));
        int e = 0;
        for (int u : g.neighbors(v))
            if (g.degree(u) == 1) ++e;
        t.pendant_count[static_cast<std::size_t>(v)] = e;
    }
    t.centers = tree_centers(adjacency_of(g));
    if (n == 1) {
        t.diameter = 0;
        t.radius = 0;
    } else {
        // Diameter from a center's eccentricity: one BFS suffices.
        const DistanceMatrix dm(g);
        t.diameter = dm.diameter();
        t.radius = dm.radius();
    }
    if (t.diameter % 2 == 0) t.even_center = t.centers.front();
    t.graph = std::move(g);
    return t;
}

TreeSpec tree_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return tree_from_graph(Graph::from_edges(n, edges));
}

TreeSpec prufer_decode(const std::vector<int>& code) {
    const int n = static_cast<int>(code.size()) + 2;
    for (int c : code)
        if (c < 0 || c >= n)
            throw std::invalid_argument("prufer_decode: symbol " + std::to_string(c) +
                                        " out of range for n=" + std::to_string(n));
    TreeSpec t = tree_from_edges(n, decode_edges(code, n));
    t.prufer = code;
    return t;
}

std::vector<int> prufer_encode(const Graph& tree) {
    const int n = tree.vertex_count();
    if (n < 2) throw std::invalid_argument("prufer_encode: need at least two vertices");
    if (tree.edge_count() != static_cast<std::size_t>(n - 1) || !is_connected(tree))
        throw std::invalid_argument("prufer_encode: input is not a tree");
    auto adj = adjacency_of(tree);
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = tree.degree(v);
    std::vector<int> code;
    code.reserve(static_cast<std::size_t>(n - 2));
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    int ptr = 0;
    while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int step = 0; step < n - 2; ++step) {
        int parent = -1;
        for (int u : adj[static_cast<std::size_t>(leaf)])
            if (!gone[static_cast<std::size_t>(u)]) parent = u;
        code.push_back(parent);
        gone[static_cast<std::size_t>(leaf)] = 1;
        if (--deg[static_cast<std::size_t>(parent)] == 1 && parent < ptr) {
            leaf = parent;
        } else {
            ++ptr;
            while (deg[static_cast<std::size_t>(ptr)] != 1 || gone[static_cast<std::size_t>(ptr)])
                ++ptr;
            leaf = ptr;
        }
    }
    return code;
}

std::string canonical_code(const Graph& tree) {
    const auto adj = adjacency_of(tree);
    const auto centers = tree_centers(adj);
    if (centers.size() == 1) return rooted_code(adj, centers[0], -1).second;
    std::string a = rooted_code(adj, centers[0], -1).second;
    std::string b = rooted_code(adj, centers[1], -1).second;
    return std::min(a, b);
}

std::vector<TreeSpec> enumerate_free_trees(int n) {
    if (n < 1 || n > 12)
        throw std::domain_error("enumerate_free_trees: n must be in [1, 12], got " +
                                std::to_string(n));
    std::vector<TreeSpec> out;
    if (n == 1) {
        out.push_back(tree_from_edges(1, {}));
        return out;
    }
    if (n == 2) {
        out.push_back(tree_from_edges(2, {{0, 1}}));
        return out;
    }
    // Labeled enumeration over nondecreasing codes only. Every isomorphism
    // class contains a labeling whose code is nondecreasing: label layers
    // top-down from a root so that deeper layers get smaller labels and
    // siblings follow their parent's label order; then the smallest-leaf
    // pruning emits parents in nondecreasing order. Duplicates are removed
    // by the canonical code.
    std::unordered_set<std::string> seen;
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == n - 2) {
            Graph g = Graph::from_edges(n, decode_edges(code, n));
            if (seen.insert(canonical_code(g)).second) out.push_back(tree_from_graph(std::move(g)));
            return;
        }
        for (int c = lo; c < n; ++c) {
            code[static_cast<std::size_t>(pos)] = c;
            rec(pos + 1, c);
        }
    };
    rec(0, 0);
    return out;
}

TreeSpec path_tree(int n) {
    if (n < 1) throw std::invalid_argument("path_tree: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return tree_from_edges(n, edges);
}

TreeSpec star_tree(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star_tree: negative leaf count");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return tree_from_edges(leaves + 1, edges);
}

TreeSpec double_star_tree(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("double_star_tree: negative leaf count");
    std::vector<std::pair<int, int>> edges{{0, 1}};
    int next = 2;
    for (int i = 0; i < a; ++i) edges.emplace_back(0, next++);
    for (int i = 0; i < b; ++i) edges.emplace_back(1, next++);
    return tree_from_edges(next, edges);
}

TreeSpec spider_tree(int arms, int tips_per_arm) {
    if (arms < 0 || tips_per_arm < 0)
        throw std::invalid_argument("spider_tree: negative parameter");
    std::vector<std::pair<int, int>> edges;
    int next = arms + 1;
    for (int arm = 1; arm <= arms; ++arm) {
        edges.emplace_back(0, arm);
        for (int t = 0; t < tips_per_arm; ++t) edges.emplace_back(arm, next++);
    }
    return tree_from_edges(next, edges);
}

TreeSpec caterpillar_tree(int spine, const std::vector<int>& leaf_counts) {
    if (spine < 1) throw std::invalid_argument("caterpillar_tree: need spine >= 1");
    if (static_cast<int>(leaf_counts.size()) != spine)
        throw std::invalid_argument("caterpillar_tree: need one leaf count per spine vertex");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < spine; ++v) edges.emplace_back(v, v + 1);
    int next = spine;
    for (int v = 0; v < spine; ++v) {
        if (leaf_counts[static_cast<std::size_t>(v)] < 0)
            throw std::invalid_argument("caterpillar_tree: negative leaf count");
        for (int i = 0; i < leaf_counts[static_cast<std::size_t>(v)]; ++i)
            edges.emplace_back(v, next++);
    }
    return tree_from_edges(next, edges);
}

std::string to_string(DiamClass c) {
    switch (c) {
        case DiamClass::two: return "2";
        case DiamClass::three: return "3";
        case DiamClass::four: return "4";
        case DiamClass::five_plus: return ">=5";
    }
    return "?";
}

Classification classify(const TreeSpec& t) {
    const int n = t.graph.vertex_count();
    if (n < 3) throw std::domain_error("classify: needs at least three vertices");
    Classification c;
    c.max_degree = t.max_degree;
    switch (t.diameter) {
        case 2: c.diam_class = DiamClass::two; break;
        case 3: c.diam_class = DiamClass::three; break;
        case 4: c.diam_class = DiamClass::four; break;
        default: c.diam_class = DiamClass::five_plus; break;
    }
    if (t.diameter == 2 || t.diameter == 4) {
        const int ct = *t.even_center;
        c.center = ct;
        c.center_degree = t.graph.degree(ct);
        c.center_pendant = t.pendant_count[static_cast<std::size_t>(ct)];
        c.max_degree_off_center = max_degree_excluding(t.graph, ct);
    }
    return c;
}

}  // namespace geodex
