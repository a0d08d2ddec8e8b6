#pragma once

#include <iosfwd>
#include <string>

#include "cubespec/family.hpp"
#include "cubespec/weight_vector.hpp"

namespace cubespec {

// Text formats. First line `d=<int>`, then one vertex per line as a binary
// string of length d (character j is '1' iff j ∈ S). Vector files add a
// decimal weight after the vertex. '#' starts a comment; blank lines are
// skipped; duplicate vertices are rejected.

VertexFamily read_family(std::istream& in);
VertexFamily read_family_file(const std::string& path);
void write_family(std::ostream& out, const VertexFamily& family);

WeightVector read_vector(std::istream& in);
WeightVector read_vector_file(const std::string& path);
void write_vector(std::ostream& out, const WeightVector& vector);

}  // namespace cubespec
