#pragma once

#include <map>
#include <vector>

#include "cubespec/family.hpp"

namespace cubespec {

/// A real vector on V(Q_d) with finite support. Absent vertices have weight 0;
/// zero weights are never stored.
class WeightVector {
public:
    explicit WeightVector(unsigned dimension);
    WeightVector(unsigned dimension, const std::map<Vertex, double>& weights);

    /// Indicator vector of a family.
    static WeightVector indicator(const VertexFamily& family);

    unsigned dimension() const { return dimension_; }
    std::size_t support_size() const { return weights_.size(); }
    const std::map<Vertex, double>& entries() const { return weights_; }

    double operator[](Vertex v) const;
    void set(Vertex v, double w);

    double norm_squared() const;
    /// Nonzero weights sorted ascending.
    std::vector<double> sorted_weights() const;
    /// Members with nonzero weight.
    VertexFamily support() const;

    bool operator==(const WeightVector&) const = default;

private:
    unsigned dimension_;
    std::map<Vertex, double> weights_;
};

}  // namespace cubespec
