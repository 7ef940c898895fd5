#pragma once

#include <vector>

#include "geodex/graph.hpp"

namespace geodex {

// All-pairs BFS hop distances for a connected graph, together with the
// derived eccentricities, radius, diameter, center and periphery.
// Construction rejects disconnected graphs, naming one vertex from each of
// two different components in the diagnostic.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);

    int vertex_count() const { return n_; }
    int at(int u, int v) const {
        return dist_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(v)];
    }
    int eccentricity(int v) const { return ecc_[static_cast<std::size_t>(v)]; }
    int radius() const { return rad_; }
    int diameter() const { return diam_; }
    const std::vector<int>& center() const { return center_; }
    const std::vector<int>& periphery() const { return periphery_; }

private:
    int n_ = 0;
    std::vector<int> dist_;
    std::vector<int> ecc_;
    int rad_ = 0;
    int diam_ = 0;
    std::vector<int> center_;
    std::vector<int> periphery_;
};

inline DistanceMatrix distances(const Graph& g) { return DistanceMatrix(g); }

}  // namespace geodex
