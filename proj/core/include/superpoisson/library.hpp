#pragma once

#include <string>
#include <vector>

#include "superpoisson/bundle.hpp"

namespace spo {

// Small named algebras used by the tool, the tests and the benchmarks.
std::vector<std::string> library_names();
// Throws ValidationError for an unknown name.
AlgebraBundle library_algebra(const std::string& name, const Field& f = Field());
// The 2x2 matrix superalgebra (associative, not supercommutative).
AlgebraBundle matrix_superalgebra_1_1(const Field& f = Field());

}  // namespace spo
