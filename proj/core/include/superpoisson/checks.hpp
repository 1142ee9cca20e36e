#pragma once

#include <cstdint>
#include <vector>

#include "superpoisson/bundle.hpp"

namespace spo {

enum class Variant { Lie, Associative, Poisson };

Report check_lie(const AlgebraBundle& a, std::uint64_t seed = 1);
Report check_associative_supercommutative(const AlgebraBundle& a);
// Leibniz rule and squaring compatibility, together with the Lie and
// associative checks.
Report check_poisson(const AlgebraBundle& a, std::uint64_t seed = 1);

Report check_derivation(const AlgebraBundle& a, const Matrix& d, Variant v, std::uint64_t seed = 1);
// Basis of the derivations of the given parity.
std::vector<Matrix> derivation_space(const AlgebraBundle& a, Variant v, int parity);
// Even basis elements first, then odd ones.
std::vector<Matrix> derivation_space(const AlgebraBundle& a, Variant v);
// Parity of a nonzero homogeneous operator on the space, nullopt otherwise.
std::optional<int> operator_parity(const SuperSpace& s, const Matrix& m);
bool span_contains(const Field& f, const std::vector<Matrix>& basis, const Matrix& m);

std::vector<Vec> center(const AlgebraBundle& a);
// Adds g (indexed by basis, odd slots only) to the squaring.
AlgebraBundle twist_squaring(const AlgebraBundle& a, const std::vector<Vec>& g);
// Installs s(x_j) := y_j after checking ad(y_j) = ad(x_j)^2.
AlgebraBundle build_squaring_from_basis(const AlgebraBundle& a, const std::vector<Vec>& y);
// Commutator bracket and squaring a -> a*a of an associative superalgebra.
AlgebraBundle assoc_to_lie(const AlgebraBundle& a);

// Throws NotEven for a map that does not preserve parity.
Report check_morphism(const AlgebraBundle& a, const AlgebraBundle& b, const Matrix& phi, Variant v);

Report check_ideal(const AlgebraBundle& a, const std::vector<Vec>& ideal, Variant v);
AlgebraBundle quotient(const AlgebraBundle& a, const std::vector<Vec>& ideal, Variant v);

}  // namespace spo
