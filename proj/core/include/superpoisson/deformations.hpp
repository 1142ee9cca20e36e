#pragma once

#include <optional>
#include <vector>

#include "superpoisson/bundle.hpp"
#include "superpoisson/cohomology.hpp"

namespace spo {

// Order-k truncated deformation: layers[i - 1] holds the coordinates of the
// even Poisson 2-cochain (mu_i, omega_i) in the degree-2 adjoint cochain space.
struct TruncatedDeformation {
  AlgebraBundle base;
  std::vector<Vec> layers;
  std::size_t order() const { return layers.size(); }
};

CochainSpace layer_space(const AlgebraBundle& p);
// Coordinates of the 2-cochain with the given phi on basis pairs and omega on odd basis vectors.
Vec layer_from_maps(const CochainSpace& s2, const BilinearTable& mu, const std::vector<Vec>& omega);

// The first layer is an even Poisson 2-cocycle.
Report check_infinitesimal(const TruncatedDeformation& d);
// The order-(k+1) obstruction, in degree-3 adjoint coordinates. Throws
// NotADeformation unless deformed_bundle(d) is a Poisson superalgebra.
Vec obstruction(const TruncatedDeformation& d);
// Whether (mu_{k+1}, omega_{k+1}) = next extends d to order k + 1.
bool check_extension(const TruncatedDeformation& d, const Vec& next);
// Some next layer extending d, if the obstruction is a coboundary of an even Poisson 2-cochain.
std::optional<Vec> find_extension(const TruncatedDeformation& d);
// The deformation as an algebra over the base field on the basis t^j e_i.
AlgebraBundle deformed_bundle(const TruncatedDeformation& d);
// A linear map psi (even Poisson 1-cochain) with a + b = d(psi), if one exists.
std::optional<Matrix> equivalent_order1(const AlgebraBundle& p, const Vec& a, const Vec& b);

}  // namespace spo
