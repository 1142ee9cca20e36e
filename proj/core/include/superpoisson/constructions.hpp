#pragma once

#include <vector>

#include "superpoisson/bundle.hpp"

namespace spo {

// A Poisson superalgebra acting on V through an associative action and a Lie
// action, one operator per basis element of the algebra.
struct Representation {
  AlgebraBundle algebra;
  SuperSpace space;
  std::vector<Matrix> assoc;  // x -> multiplication operator on V
  std::vector<Matrix> lie;    // x -> bracket operator on V
};

Report check_representation(const Representation& r);
Representation adjoint_representation(const AlgebraBundle& p);
// Poisson structure on P + V. Throws InvalidRepresentation when the input
// fails check_representation.
AlgebraBundle semidirect_poisson(const Representation& r);
// P (x) Q on pairs of basis vectors, P-index major.
AlgebraBundle tensor_product(const AlgebraBundle& p, const AlgebraBundle& q);

// Linear extension of per-basis operators to an arbitrary element.
Matrix operator_of(const Field& f, const std::vector<Matrix>& ops, const Vec& x, std::size_t rows);

}  // namespace spo
