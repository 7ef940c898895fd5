#include "geodex/convexity.hpp"

#include <bit>
#include <cassert>
#include <chrono>
#include <stdexcept>
#include <string>

namespace geodex {

namespace {

using word = VertexSet::word_type;

int require_word_size(const DistanceMatrix& dm) {
    const int n = dm.vertex_count();
    if (n > VertexSet::max_vertices)
        throw std::domain_error("convexity: graph has " + std::to_string(n) +
                                " vertices, exact pipeline is capped at " +
                                std::to_string(VertexSet::max_vertices));
    return n;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

IntervalTable::IntervalTable(const DistanceMatrix& dm) : n_(require_word_size(dm)) {
    const std::size_t n = static_cast<std::size_t>(n_);
    masks_.assign(n * n, 0);
    for (int u = 0; u < n_; ++u) {
        for (int v = u; v < n_; ++v) {
            const int duv = dm.at(u, v);
            word m = 0;
            for (int w = 0; w < n_; ++w)
                if (dm.at(u, w) + dm.at(w, v) == duv) m |= word{1} << w;
            masks_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = m;
            masks_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = m;
        }
    }
}

VertexSet IntervalTable::expand(VertexSet s) const {
    const std::size_t n = static_cast<std::size_t>(n_);
    word out = 0;
    for (word a = s.word(); a != 0; a &= a - 1) {
        const word* row = &masks_[static_cast<std::size_t>(std::countr_zero(a)) * n];
        for (word b = a; b != 0; b &= b - 1) out |= row[std::countr_zero(b)];
    }
    return VertexSet::from_word(out);
}

bool IntervalTable::convex(VertexSet s) const {
    const std::size_t n = static_cast<std::size_t>(n_);
    const word sw = s.word();
    for (word a = sw; a != 0; a &= a - 1) {
        const word* row = &masks_[static_cast<std::size_t>(std::countr_zero(a)) * n];
        for (word b = a & (a - 1); b != 0; b &= b - 1)
            if (row[std::countr_zero(b)] & ~sw) return false;
    }
    return true;
}

VertexSet IntervalTable::closure(VertexSet s) const {
    const std::size_t n = static_cast<std::size_t>(n_);
    word cur = s.word();
    word frontier = cur;
    int rounds = 0;
    while (frontier != 0) {
        // Each round strictly grows the set, so at most n+1 rounds happen.
        ++rounds;
        assert(rounds <= n_ + 1);
        word added = 0;
        for (word f = frontier; f != 0; f &= f - 1) {
            const word* row = &masks_[static_cast<std::size_t>(std::countr_zero(f)) * n];
            for (word b = cur; b != 0; b &= b - 1) added |= row[std::countr_zero(b)];
        }
        frontier = added & ~cur;
        cur |= frontier;
    }
    return VertexSet::from_word(cur);
}

VertexSet IntervalTable::close_with(VertexSet s, int u) const {
    // s must already be closed; only pairs touching the new vertex (and
    // whatever they pull in) need scanning.
    const std::size_t n = static_cast<std::size_t>(n_);
    word cur = s.word() | (word{1} << u);
    word frontier = word{1} << u;
    while (frontier != 0) {
        word added = 0;
        for (word f = frontier; f != 0; f &= f - 1) {
            const word* row = &masks_[static_cast<std::size_t>(std::countr_zero(f)) * n];
            for (word b = cur; b != 0; b &= b - 1) added |= row[std::countr_zero(b)];
        }
        frontier = added & ~cur;
        cur |= frontier;
    }
    return VertexSet::from_word(cur);
}

VertexSet interval(const DistanceMatrix& dm, int u, int v) {
    const int n = require_word_size(dm);
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("interval: vertex out of range");
    word m = 0;
    const int duv = dm.at(u, v);
    for (int w = 0; w < n; ++w)
        if (dm.at(u, w) + dm.at(w, v) == duv) m |= word{1} << w;
    return VertexSet::from_word(m);
}

VertexSet interval_of_set(const DistanceMatrix& dm, VertexSet s) {
    return IntervalTable(dm).expand(s);
}

bool is_convex(const DistanceMatrix& dm, VertexSet s) { return IntervalTable(dm).convex(s); }

VertexSet convex_closure(const DistanceMatrix& dm, VertexSet s) {
    return IntervalTable(dm).closure(s);
}

bool is_hull_set(const DistanceMatrix& dm, VertexSet s) { return IntervalTable(dm).hull_set(s); }

ConvexityResult convexity_number_exhaustive(const DistanceMatrix& dm) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = require_word_size(dm);
    const IntervalTable table(dm);
    const word all = VertexSet::full(n).word();

    // hull_with[u]: vertices v such that {u,v} already hulls the whole graph.
    // No proper convex set contains such a pair, so candidates holding one
    // are skipped without testing.
    std::vector<word> hull_with(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (table.hull_set(VertexSet{u, v})) {
                hull_with[static_cast<std::size_t>(u)] |= word{1} << v;
                hull_with[static_cast<std::size_t>(v)] |= word{1} << u;
            }
    auto contains_hull_pair = [&](word s) {
        for (word a = s; a != 0; a &= a - 1)
            if (hull_with[static_cast<std::size_t>(std::countr_zero(a))] & s) return true;
        return false;
    };

    ConvexityResult res;
    for (int k = n - 1; k >= 0; --k) {
        word s = (k == 0) ? 0 : (word{1} << k) - 1;
        while (true) {
            if (!contains_hull_pair(s)) {
                ++res.explored;
                if (table.convex(VertexSet::from_word(s))) {
                    res.value = k;
                    res.witness = VertexSet::from_word(s);
                    res.elapsed_ms = ms_since(t0);
                    return res;
                }
            }
            if (s == 0) break;
            // Gosper's hack: next word with k bits, ascending.
            const word c = s & -s;
            const word r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
            if (s > all) break;
        }
    }
    // Not reached: the empty set is convex and proper for every n >= 1.
    res.elapsed_ms = ms_since(t0);
    return res;
}

namespace {

struct BnbSearch {
    const IntervalTable& table;
    const int n;
    const word forbidden;
    int& best_value;
    word& best_witness;
    std::uint64_t nodes = 0;

    void consider(word s) {
        const int size = std::popcount(s);
        if (size > best_value || (size == best_value && s < best_witness)) {
            best_value = size;
            best_witness = s;
        }
    }

    // s is closed and avoids the forbidden vertex. Chosen vertices grow in
    // increasing order; every target set is reached along the path that
    // always picks its smallest vertex missing from the running closure.
    void grow(word s, int last_chosen) {
        ++nodes;
        consider(s);
        word feasible = 0;
        word closures[VertexSet::max_vertices];
        const word candidates = VertexSet::full(n).word() & ~s & ~forbidden;
        for (word c = candidates; c != 0; c &= c - 1) {
            const int u = std::countr_zero(c);
            const word cl = table.close_with(VertexSet::from_word(s), u).word();
            if (cl & forbidden) continue;
            feasible |= word{1} << u;
            closures[u] = cl;
        }
        // Every convex extension avoiding the forbidden vertex lies inside
        // s | feasible: bound. Ties are kept alive for the lexicographic
        // witness rule, hence the strict comparison.
        if (std::popcount(s) + std::popcount(feasible) < best_value) return;
        const word ahead =
            (last_chosen < 0) ? feasible : feasible & ~((word{2} << last_chosen) - 1);
        for (word c = ahead; c != 0; c &= c - 1) {
            const int u = std::countr_zero(c);
            grow(closures[u], u);
        }
    }
};

}  // namespace

ConvexityResult convexity_number_bnb(const DistanceMatrix& dm) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = require_word_size(dm);
    const IntervalTable table(dm);

    int best_value = -1;
    word best_witness = 0;
    std::uint64_t nodes = 0;
    for (int v = 0; v < n; ++v) {
        // Every proper convex set avoids at least one vertex.
        BnbSearch search{table, n, word{1} << v, best_value, best_witness, 0};
        search.grow(0, -1);
        nodes += search.nodes;
    }

    ConvexityResult res;
    res.value = best_value;
    res.witness = VertexSet::from_word(best_witness);
    res.explored = nodes;
    res.elapsed_ms = ms_since(t0);
    return res;
}

}  // namespace geodex
