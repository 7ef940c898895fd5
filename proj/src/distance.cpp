#include "geodex/distance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace geodex {

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.vertex_count()) {
    if (n_ == 0) throw std::domain_error("distances: empty graph");
    const std::size_t n = static_cast<std::size_t>(n_);
    dist_.assign(n * n, -1);
    ecc_.assign(n, 0);

    std::vector<int> queue(n);
    for (int src = 0; src < n_; ++src) {
        int* row = &dist_[static_cast<std::size_t>(src) * n];
        row[src] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = src;
        while (head < tail) {
            const int v = queue[head++];
            for (int u : g.neighbors(v)) {
                if (row[u] == -1) {
                    row[u] = row[v] + 1;
                    queue[tail++] = u;
                }
            }
        }
        if (tail != n) {
            // Name one vertex from each side of the split.
            int missing = 0;
            while (row[missing] != -1) ++missing;
            throw std::domain_error("distances: graph is disconnected (vertex " +
                                    std::to_string(src) + " and vertex " +
                                    std::to_string(missing) + " lie in different components)");
        }
        int ecc = 0;
        for (std::size_t v = 0; v < n; ++v) ecc = std::max(ecc, row[v]);
        ecc_[static_cast<std::size_t>(src)] = ecc;
    }

    rad_ = ecc_[0];
    diam_ = ecc_[0];
    for (int v = 1; v < n_; ++v) {
        rad_ = std::min(rad_, ecc_[static_cast<std::size_t>(v)]);
        diam_ = std::max(diam_, ecc_[static_cast<std::size_t>(v)]);
    }
    for (int v = 0; v < n_; ++v) {
        if (ecc_[static_cast<std::size_t>(v)] == rad_) center_.push_back(v);
        if (ecc_[static_cast<std::size_t>(v)] == diam_) periphery_.push_back(v);
    }
}

}  // namespace geodex
