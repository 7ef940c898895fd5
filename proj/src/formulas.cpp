#include "geodex/formulas.hpp"

#include <algorithm>
#include <stdexcept>

#include "geodex/convexity.hpp"
#include "geodex/distance.hpp"

namespace geodex {

std::string to_string(FormulaCase c) {
    switch (c) {
        case FormulaCase::diam2: return "diam2";
        case FormulaCase::diam3: return "diam3";
        case FormulaCase::diam4_center_below_max: return "diam4-lt";
        case FormulaCase::diam4_center_at_max: return "diam4-eq";
        case FormulaCase::diam_ge5: return "diam>=5";
        case FormulaCase::disconnected: return "disconnected";
    }
    return "?";
}

FormulaVerdict predict_tree_prism(const TreeSpec& t) {
    const Classification c = classify(t);
    const int n = t.graph.vertex_count();
    const int maxdeg = c.max_degree;
    FormulaVerdict v;
    auto add = [&](const char* label, int value) { v.terms.push_back({label, value}); };
    switch (c.diam_class) {
        case DiamClass::five_plus:
            v.tag = FormulaCase::diam_ge5;
            add("tree order", n);
            add("star-mirror", 2 * maxdeg + 1);
            break;
        case DiamClass::four:
            if (*c.center_degree < maxdeg) {
                v.tag = FormulaCase::diam4_center_below_max;
                add("leaf-complement at a max-degree vertex", n + maxdeg - 1);
            } else {
                v.tag = FormulaCase::diam4_center_at_max;
                add("leaf-complement off center", n + *c.max_degree_off_center - 1);
                add("star-mirror", 2 * maxdeg + 1);
                add("leaf-complement at the center", n + 2 * *c.center_pendant - maxdeg + 1);
            }
            break;
        case DiamClass::three:
            v.tag = FormulaCase::diam3;
            add("leaf-complement at the max-degree center", n + maxdeg - 1);
            break;
        case DiamClass::two:
            v.tag = FormulaCase::diam2;
            add("prism minus one vertex", 2 * n - 1);
            break;
    }
    v.predicted = 0;
    for (const auto& term : v.terms) v.predicted = std::max(v.predicted, term.value);
    return v;
}

FormulaVerdict predict_disconnected_prism(const Graph& g) {
    const auto comps = components(g);
    if (comps.size() < 2)
        throw std::domain_error("predict_disconnected_prism: input graph is connected");
    std::size_t k = comps.front().size();
    for (const auto& comp : comps) k = std::min(k, comp.size());
    FormulaVerdict v;
    v.tag = FormulaCase::disconnected;
    v.terms.push_back({"2n minus a minimum component", 2 * g.vertex_count() - static_cast<int>(k)});
    v.predicted = v.terms.front().value;
    return v;
}

namespace {

int check_prism_coords(const TreeSpec& t) {
    const int n = t.graph.vertex_count();
    if (2 * n > VertexSet::max_vertices)
        throw std::domain_error("witness: prism order " + std::to_string(2 * n) +
                                " exceeds the word-size cap");
    return n;
}

}  // namespace

VertexSet star_mirror_witness(const TreeSpec& t, int x) {
    const int n = check_prism_coords(t);
    if (x < 0 || x >= n)
        throw std::invalid_argument("star_mirror_witness: vertex out of range");
    VertexSet h = VertexSet::single(x);
    for (int u : t.graph.neighbors(x)) {
        h.insert(u);
        h.insert(u + n);
    }
    return h;
}

VertexSet leaf_complement_witness(const TreeSpec& t, int w) {
    const int n = check_prism_coords(t);
    if (w < 0 || w >= n)
        throw std::invalid_argument("leaf_complement_witness: vertex out of range");
    if (t.diameter > 4)
        throw std::domain_error("leaf_complement_witness: tree diameter exceeds 4");
    if (t.graph.degree(w) < 2)
        throw std::invalid_argument("leaf_complement_witness: vertex " + std::to_string(w) +
                                    " is pendant");
    VertexSet h = VertexSet::single(w);
    for (int u : t.graph.neighbors(w))
        if (t.graph.degree(u) == 1) h.insert(u);
    for (int v = 0; v < n; ++v) {
        const bool non_pendant_neighbor = t.graph.has_edge(v, w) && t.graph.degree(v) > 1;
        if (!non_pendant_neighbor) h.insert(v + n);
    }
    return h;
}

std::vector<HullCheckEntry> hull_containment_checks(const TreeSpec& t) {
    const int n = check_prism_coords(t);
    const Graph prism = complementary_prism(t.graph);
    const DistanceMatrix pdm(prism);
    const IntervalTable table(pdm);
    const VertexSet full = table.full();
    VertexSet mirror_side;
    for (int v = 0; v < n; ++v) mirror_side.insert(v + n);

    std::vector<HullCheckEntry> out;
    auto& complement_plus_one = out.emplace_back(HullCheckEntry{"complement-plus-one", true});
    for (int u = 0; u < n; ++u) {
        ++complement_plus_one.tuples;
        if (table.closure(mirror_side | VertexSet::single(u)) != full)
            ++complement_plus_one.failures;
    }

    const DistanceMatrix tdm(t.graph);

    auto& distance3 = out.emplace_back(HullCheckEntry{"distance3-pair", t.diameter >= 3});
    if (distance3.applicable) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (tdm.at(u, v) != 3) continue;
                ++distance3.tuples;
                if (table.closure(VertexSet{u, v}) != full) ++distance3.failures;
            }
    }

    auto mirror_pair_hulls = [&](int u, int v) {
        return mirror_side.subset_of(table.closure(VertexSet{u + n, v + n}));
    };

    auto& adjacent6 = out.emplace_back(HullCheckEntry{"adjacent-pair-mirror-diam6plus", t.diameter >= 6});
    if (adjacent6.applicable) {
        for (auto [u, v] : t.graph.edges()) {
            ++adjacent6.tuples;
            if (!mirror_pair_hulls(u, v)) ++adjacent6.failures;
        }
    }

    auto& peripheral5 = out.emplace_back(HullCheckEntry{"peripheral-pair-mirror-diam5", t.diameter == 5});
    if (peripheral5.applicable) {
        for (int u : tdm.periphery())
            for (int v : t.graph.neighbors(u)) {
                ++peripheral5.tuples;
                if (!mirror_pair_hulls(u, v)) ++peripheral5.failures;
            }
    }

    auto& middle5 = out.emplace_back(HullCheckEntry{"middle-triple-mirror-diam5", t.diameter == 5});
    if (middle5.applicable) {
        // u - v - w with v adjacent to both ends.
        for (int v = 0; v < n; ++v) {
            const auto& nb = t.graph.neighbors(v);
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j) {
                    ++middle5.tuples;
                    const VertexSet s{nb[i] + n, v + n, nb[j] + n};
                    if (!mirror_side.subset_of(table.closure(s))) ++middle5.failures;
                }
        }
    }

    auto& fan4 = out.emplace_back(HullCheckEntry{"center-fan-triple-diam4", t.diameter == 4});
    if (fan4.applicable) {
        const int x = *t.even_center;
        const auto& nb = t.graph.neighbors(x);
        for (int u : nb) {
            if (t.graph.degree(u) < 2) continue;
            for (int v : nb) {
                if (v == u) continue;
                ++fan4.tuples;
                const VertexSet s{u + n, v + n, x + n};
                if (!mirror_side.subset_of(table.closure(s))) ++fan4.failures;
            }
        }
    }

    return out;
}

}  // namespace geodex
