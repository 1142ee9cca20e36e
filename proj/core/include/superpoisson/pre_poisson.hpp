#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superpoisson/bundle.hpp"

namespace spo {

// A superspace with two unrelated products: a Zinbiel candidate (star) and a
// left-symmetric candidate (triangle).
struct TwoProductBundle {
  Field field;
  SuperSpace space;
  BilinearTable star;
  BilinearTable triangle;
  std::string name;

  std::size_t dim() const { return space.dim(); }
  Vec zero() const { return Vec(dim(), 0); }
  Vec basis(std::size_t i) const { return unit_vector(dim(), i); }
};

TwoProductBundle make_two_product(const Field& f, const SuperSpace& s, std::string name = {});
Vec eval_star(const TwoProductBundle& b, const Vec& x, const Vec& y);
Vec eval_triangle(const TwoProductBundle& b, const Vec& x, const Vec& y);

// x*(y*z) = (y*x)*z + (x*y)*z, plus left-commutativity and x*(x*z) = 0.
Report check_zinbiel(const TwoProductBundle& b, std::uint64_t seed = 1);
// Symmetrized product x*y + y*x.
AlgebraBundle zinbiel_to_assoc(const TwoProductBundle& b);
// Smallest k such that every left tower x1*(x2*(...*xk)) vanishes, if k <= dim + 1.
std::optional<std::size_t> zinbiel_nilpotency_index(const TwoProductBundle& b);

Report check_left_symmetric(const TwoProductBundle& b, std::uint64_t seed = 1);
// Bracket x|>y + y|>x and squaring x|>x.
AlgebraBundle lss_to_lie(const TwoProductBundle& b);

// Both compatibility identities, together with the Zinbiel and left-symmetric checks.
Report check_pre_poisson(const TwoProductBundle& b, std::uint64_t seed = 1);
AlgebraBundle pre_poisson_to_poisson(const TwoProductBundle& b);

enum class RotaBaxterVariant { Associative, Lie };

// Throws NotEven for an operator that does not preserve parity.
Report check_rota_baxter(const AlgebraBundle& a, const Matrix& r, RotaBaxterVariant v, std::uint64_t seed = 1);
// x*y = R(x)y and x|>y = [R(x), y]. Throws NotRotaBaxter unless R satisfies both variants.
TwoProductBundle rota_baxter_to_pre_poisson(const AlgebraBundle& p, const Matrix& r);
// Every parity-preserving 0/1 matrix that is a Rota-Baxter operator for both
// the product and the Lie structure. Limited to dimension 4.
std::vector<Matrix> rota_baxter_search(const AlgebraBundle& p);

}  // namespace spo
