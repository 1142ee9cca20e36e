#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superpoisson/bundle.hpp"

namespace spo {

enum class DPType { PiI, PiPi };
enum class VarRole { P, Q, Theta, Xi, Eta };

struct DPVariable {
  std::string name;
  VarRole role = VarRole::P;
  unsigned height = 1;  // exponents run over 0 .. 2^height - 1
  int parity() const { return role == VarRole::P || role == VarRole::Q ? 0 : 1; }
};

struct DPSpec {
  std::vector<DPVariable> vars;
};

// Variables p1..pk, q1..qk, then theta1..thetan (PiI) or xi/eta pairs (PiPi).
// `heights` lists even-variable heights; a single value applies to all of them.
DPSpec make_dp_spec(DPType type, std::size_t even_pairs, std::size_t odd_vars, const std::vector<unsigned>& heights);

using Monomial = std::vector<unsigned>;

constexpr std::size_t kMaxDividedPowerDim = 4096;

// The divided-power algebra on the monomial basis. Monomial order is
// reverse-lexicographic: the last variable is the most significant.
class DividedPowers {
 public:
  DividedPowers(const Field& f, DPSpec spec);

  const Field& field() const { return field_; }
  const DPSpec& spec() const { return spec_; }
  std::size_t dim() const { return monomials_.size(); }
  const Monomial& monomial(std::size_t i) const { return monomials_[i]; }
  std::optional<std::size_t> index_of(const Monomial& m) const;
  int parity(std::size_t i) const;
  std::string name(std::size_t i) const;
  SuperSpace space() const;

  // Index of the product of two basis monomials, or nullopt when it vanishes.
  std::optional<std::size_t> multiply_basis(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> partial_basis(std::size_t var, std::size_t a) const;

  Vec monomial_vector(const Monomial& m) const;
  Vec multiply(const Vec& x, const Vec& y) const;
  Vec partial(std::size_t var, const Vec& x) const;
  // Divided square of an even element, with the divided square of 1 taken as 0.
  Vec gamma2(const Vec& x) const;

 private:
  Field field_;
  DPSpec spec_;
  std::vector<Monomial> monomials_;
  std::vector<std::size_t> strides_;
};

// Binomial coefficient C(i+j, i) reduced mod 2.
inline bool binom_odd(unsigned i, unsigned j) { return (i & j) == 0; }

AlgebraBundle build_pi_i(const Field& f, const DPSpec& spec);
AlgebraBundle build_pi_pi(const Field& f, const DPSpec& spec);
AlgebraBundle build_divided_power(const Field& f, DPType type, const DPSpec& spec);

}  // namespace spo
