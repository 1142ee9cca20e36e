#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "superpoisson/bundle.hpp"
#include "superpoisson/lie_rinehart.hpp"

namespace spo {

// Degree-capped model of the enveloping algebra of a Lie-Rinehart triple.
//
// Generators are the basis of A followed by the basis of L. Words are brought
// to normal form by the supercommutator, squaring and A-multiplication rules;
// the remaining ideal relations are generated up to word length
// max_degree + slack and eliminated. Elements are coordinate vectors over the
// normal monomials, largest monomial first.
class TruncatedUEA {
 public:
  TruncatedUEA(const LieRinehartTriple& t, std::size_t max_degree, std::size_t slack);

  const LieRinehartTriple& triple() const;
  std::size_t max_degree() const;
  std::size_t slack() const;
  std::size_t word_cap() const { return max_degree() + slack(); }

  std::size_t generator_count() const;
  const std::string& generator_name(std::size_t g) const;
  // Number of normal monomials, i.e. the coordinate dimension.
  std::size_t dim() const;
  const std::string& monomial_name(std::size_t i) const;
  std::size_t monomial_degree(std::size_t i) const;
  std::vector<std::size_t> monomial_letters(std::size_t i) const;
  std::size_t relation_rank() const;

  // Coset dimension in each filtration degree 0..max_degree. The unit i(1)
  // is counted in degree 0 when A is unital.
  std::vector<std::size_t> degree_dims() const;
  // Normal monomials of degree <= max_degree that represent cosets.
  std::vector<std::size_t> representatives() const;

  Vec zero() const { return Vec(dim(), 0); }
  Vec letter(std::size_t g) const;
  // i(a + x) for a in A and x in L.
  Vec embed(const Vec& a, const Vec& x) const;
  Vec embed_a(const Vec& a) const;
  Vec embed_l(const Vec& x) const;
  // Product of normal forms; throws SizeBudgetExceeded past the word cap.
  Vec multiply(const Vec& u, const Vec& v) const;
  // Canonical coset representative.
  Vec reduce(const Vec& v) const;
  bool equal(const Vec& u, const Vec& v) const { return reduce(u) == reduce(v); }
  std::size_t degree(const Vec& v) const;
  // Rows of the relation basis, for use by factorization checks.
  const std::vector<Vec>& relations() const;

  struct Impl;

 private:
  std::shared_ptr<Impl> impl_;
};

struct StabilityCertificate {
  std::size_t slack = 0;
  std::vector<std::size_t> dims;       // with the given slack
  std::vector<std::size_t> dims_next;  // with one more
  bool stable = false;
};

struct UEAResult {
  TruncatedUEA uea;
  StabilityCertificate certificate;
};

// Builds the model at slack and slack + 1 and throws UnstableTruncation if
// the coset dimensions up to max_degree differ.
UEAResult truncated_uea(const LieRinehartTriple& t, std::size_t max_degree, std::size_t slack = 2);

Report check_uea_relations(const TruncatedUEA& u, std::uint64_t seed = 1);

struct PoissonUEA {
  UEAResult result;
  Kaehler kaehler;
  Matrix m;  // column i: i_P(e_i)
  Matrix h;  // column i: i_Omega(d e_i)
  Report relations;
};

PoissonUEA poisson_uea(const AlgebraBundle& p, std::size_t max_degree, std::size_t slack = 2,
                       std::uint64_t seed = 1);

// Checks that the algebra map determined by r_a on A and r_l on L is well
// defined on the truncated model. Target b is an associative superalgebra;
// r_a, r_l have one column per basis vector of A, L. Throws HypothesesFail
// when the maps violate the Lie-Rinehart morphism hypotheses.
Report check_factorization(const TruncatedUEA& u, const AlgebraBundle& b, const Matrix& r_a, const Matrix& r_l);
// Same for a Poisson triple (b, m, h); h is factored through the Kaehler differentials.
Report check_poisson_factorization(const PoissonUEA& u, const AlgebraBundle& b, const Matrix& m, const Matrix& h);

}  // namespace spo
