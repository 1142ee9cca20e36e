#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superpoisson/error.hpp"

namespace spo {

// Field elements are residues of polynomials over GF(2), stored as bit patterns.
using Scalar = std::uint8_t;

// GF(2^k) for 1 <= k <= 8. Multiplication goes through log/antilog tables
// built from a primitive element; k = 1 short-circuits to AND.
class Field {
 public:
  explicit Field(int degree = 1, std::optional<unsigned> modulus = std::nullopt);

  static unsigned default_modulus(int degree);
  static bool is_irreducible(unsigned poly);

  int degree() const { return degree_; }
  unsigned modulus() const { return modulus_; }
  unsigned order() const { return 1u << degree_; }

  static Scalar add(Scalar a, Scalar b) { return a ^ b; }
  Scalar mul(Scalar a, Scalar b) const {
    if (degree_ == 1) return a & b;
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Scalar square(Scalar a) const { return mul(a, a); }
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  // Reference multiplication by shift-and-reduce; independent of the tables.
  Scalar mul_slow(Scalar a, Scalar b) const;

  std::string to_hex(Scalar a) const;
  Scalar from_hex(const std::string& text) const;

  bool operator==(const Field& other) const {
    return degree_ == other.degree_ && modulus_ == other.modulus_;
  }

 private:
  int degree_;
  unsigned modulus_;
  std::array<Scalar, 512> exp_{};
  std::array<int, 256> log_{};
};

using Vec = std::vector<Scalar>;

// Dense vector helpers. All vectors in a computation share one field.
inline bool is_zero(const Vec& v) {
  for (Scalar c : v)
    if (c) return false;
  return true;
}
inline void add_into(Vec& y, const Vec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] ^= x[i];
}
void axpy(const Field& f, Vec& y, Scalar a, const Vec& x);
Vec scaled(const Field& f, Scalar a, const Vec& x);
Vec unit_vector(std::size_t n, std::size_t i);

}  // namespace spo
