#pragma once

#include <cstddef>
#include <vector>

namespace surfcurve {

// Symmetric pairwise distance matrix over sample indices.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {}

    std::size_t size() const { return n_; }

    double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    void set(std::size_t i, std::size_t j, double d) {
        entries_[i * n_ + j] = d;
        entries_[j * n_ + i] = d;
    }

private:
    std::size_t n_ = 0;
    std::vector<double> entries_;
};

}  // namespace surfcurve
