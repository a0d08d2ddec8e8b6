#include "cubespec/weight_vector.hpp"

#include <algorithm>

namespace cubespec {

WeightVector::WeightVector(unsigned dimension) : dimension_(dimension) {
    if (dimension < 1 || dimension > kMaxDimension) throw precondition_error("dimension outside 1..64");
}

WeightVector::WeightVector(unsigned dimension, const std::map<Vertex, double>& weights) : WeightVector(dimension) {
    for (const auto& [v, w] : weights) set(v, w);
}

WeightVector WeightVector::indicator(const VertexFamily& family) {
    WeightVector out(family.dimension());
    for (Vertex v : family) out.weights_.emplace_hint(out.weights_.end(), v, 1.0);
    return out;
}

double WeightVector::operator[](Vertex v) const {
    auto it = weights_.find(v);
    return it == weights_.end() ? 0.0 : it->second;
}

void WeightVector::set(Vertex v, double w) {
    if (!v.within(dimension_)) throw precondition_error("vertex " + v.to_string() + " outside the cube");
    if (w == 0.0)
        weights_.erase(v);
    else
        weights_[v] = w;
}

double WeightVector::norm_squared() const {
    double total = 0.0;
    for (const auto& [v, w] : weights_) total += w * w;
    return total;
}

std::vector<double> WeightVector::sorted_weights() const {
    std::vector<double> out;
    out.reserve(weights_.size());
    for (const auto& [v, w] : weights_) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

VertexFamily WeightVector::support() const {
    std::vector<Vertex> members;
    members.reserve(weights_.size());
    for (const auto& [v, w] : weights_) members.push_back(v);
    return VertexFamily(dimension_, std::move(members));
}

}  // namespace cubespec
