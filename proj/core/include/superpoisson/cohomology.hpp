#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superpoisson/bundle.hpp"

namespace spo {

// A module over a Lie superalgebra: one operator on M per basis element of L.
struct Module {
  SuperSpace space;
  std::vector<Matrix> action;
  std::size_t dim() const { return space.dim(); }
};

Module adjoint_module(const AlgebraBundle& l);
// Operator of an arbitrary element, extended linearly from the basis.
Matrix module_operator(const Field& f, const Module& m, const Vec& x);

using Tuple = std::vector<std::uint16_t>;

// Coordinates of the degree-n cochains (phi, omega) with values in M.
// phi: increasing n-tuples of basis indices times a basis vector of M.
// omega (n >= 2): odd basis index, increasing (n-2)-tuple, basis vector of M.
class CochainSpace {
 public:
  CochainSpace(AlgebraBundle l, Module m, std::size_t degree);

  const AlgebraBundle& algebra() const { return l_; }
  const Module& module() const { return m_; }
  const Field& field() const { return l_.field; }
  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return phi_count() + omega_count(); }
  std::size_t phi_count() const { return phi_tuples_.size() * m_.dim(); }
  std::size_t omega_count() const { return odd_.size() * omega_tuples_.size() * m_.dim(); }

  const std::vector<Tuple>& phi_tuples() const { return phi_tuples_; }
  const std::vector<Tuple>& omega_tuples() const { return omega_tuples_; }
  const std::vector<std::size_t>& odd_basis() const { return odd_; }

  // Index of an increasing tuple among tuples of its length.
  std::size_t tuple_rank(const Tuple& t) const;
  std::size_t phi_index(std::size_t tuple_rank, std::size_t m) const { return tuple_rank * m_.dim() + m; }
  std::size_t omega_index(std::size_t odd_pos, std::size_t tuple_rank, std::size_t m) const {
    return phi_count() + (odd_pos * omega_tuples_.size() + tuple_rank) * m_.dim() + m;
  }
  std::optional<std::size_t> odd_position(std::size_t basis_index) const;

  // Parity a cochain must have for this coordinate to be nonzero.
  int coord_parity(std::size_t c) const;
  std::vector<std::size_t> coords_of_parity(int parity) const;
  std::string coord_name(std::size_t c) const;

 private:
  AlgebraBundle l_;
  Module m_;
  std::size_t degree_;
  std::vector<Tuple> phi_tuples_;
  std::vector<Tuple> omega_tuples_;
  std::vector<std::size_t> odd_;
  std::vector<std::int64_t> odd_pos_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

// phi or omega of a cochain, as a vector in M.
Vec eval_phi(const CochainSpace& s, const Vec& coords, const std::vector<Vec>& args);
Vec eval_omega(const CochainSpace& s, const Vec& coords, const Vec& x, const std::vector<Vec>& rest);

// Matrix of d from src (degree n) to dst (degree n + 1).
SparseMatrix coboundary(const CochainSpace& src, const CochainSpace& dst);
SparseMatrix coboundary_matrix(const CochainSpace& src);

struct CohomologyResult {
  std::size_t degree = 0;
  std::optional<int> parity;
  std::size_t dim = 0;
  std::size_t cochain_dim = 0;
  std::vector<Vec> cocycles;      // in cochain coordinates
  std::vector<Vec> coboundaries;  // reduced basis of the image
  std::vector<Vec> representatives;
};

// Parity nullopt means both parities.
CohomologyResult lie_cohomology(const AlgebraBundle& l, const Module& m, std::size_t n, std::optional<int> parity);

// Basis of the Poisson cochains of degree n (values in P) inside XC^n(P;P).
std::vector<Vec> poisson_subspace(const AlgebraBundle& p, std::size_t n, std::optional<int> parity);
// Linear conditions cut out by the Poisson cochain axioms; the subspace is its kernel.
SparseMatrix poisson_constraints(const CochainSpace& s);
CohomologyResult poisson_cohomology(const AlgebraBundle& p, std::size_t n, std::optional<int> parity);

struct LieCocycle {
  CochainSpace space;
  Vec coords;
};

// Lie 2-cocycle of the commutator algebra attached to a Hochschild 2-cocycle
// `mu` (an unsymmetrised table), with values in the adjoint module.
LieCocycle hochschild_to_lie(const AlgebraBundle& a, const BilinearTable& mu);

}  // namespace spo
