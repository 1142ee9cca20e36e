#include "superpoisson/field.hpp"

#include <bit>
#include <sstream>

namespace spo {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonIrreducibleModulus: return "NonIrreducibleModulus";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotASubspace: return "NotASubspace";
    case ErrorKind::MissingStructure: return "MissingStructure";
    case ErrorKind::NotOddHomogeneous: return "NotOddHomogeneous";
    case ErrorKind::NotEven: return "NotEven";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::AdSquareMismatch: return "AdSquareMismatch";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorKind::RoleMismatch: return "RoleMismatch";
    case ErrorKind::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorKind::NotStrong: return "NotStrong";
    case ErrorKind::NoUnit: return "NoUnit";
    case ErrorKind::NotPoisson: return "NotPoisson";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::DifferentialEscapesSubspace: return "DifferentialEscapesSubspace";
    case ErrorKind::NotAHochschildCocycle: return "NotAHochschildCocycle";
    case ErrorKind::NotADeformation: return "NotADeformation";
    case ErrorKind::UnstableTruncation: return "UnstableTruncation";
    case ErrorKind::HypothesesFail: return "HypothesesFail";
    case ErrorKind::NotRotaBaxter: return "NotRotaBaxter";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Error";
}

namespace {

int poly_degree(unsigned p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

unsigned poly_mod(unsigned a, unsigned m) {
  int dm = poly_degree(m);
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) a ^= m << (d - dm);
  return a;
}

}  // namespace

unsigned Field::default_modulus(int degree) {
  // Conway polynomials; all primitive.
  static const unsigned table[] = {0, 0x3, 0x7, 0xB, 0x13, 0x25, 0x5B, 0x83, 0x11D};
  if (degree < 1 || degree > 8)
    throw Error(ErrorKind::UnsupportedDegree, "degree " + std::to_string(degree));
  return table[degree];
}

bool Field::is_irreducible(unsigned poly) {
  int d = poly_degree(poly);
  if (d < 1) return false;
  // Trial division by every polynomial of degree 1..d/2.
  for (unsigned q = 2; poly_degree(q) <= d / 2; ++q)
    if (poly_mod(poly, q) == 0) return false;
  return true;
}

Field::Field(int degree, std::optional<unsigned> modulus) : degree_(degree) {
  if (degree < 1 || degree > 8)
    throw Error(ErrorKind::UnsupportedDegree, "degree " + std::to_string(degree));
  modulus_ = modulus.value_or(default_modulus(degree));
  if (poly_degree(modulus_) != degree)
    throw Error(ErrorKind::NonIrreducibleModulus, "modulus degree differs from field degree");
  if (!is_irreducible(modulus_))
    throw Error(ErrorKind::NonIrreducibleModulus, "modulus " + std::to_string(modulus_));
  if (degree == 1) return;
  const unsigned n = order() - 1;
  // Search for a primitive element; x itself for the built-in moduli.
  for (unsigned g = 2; g <= n; ++g) {
    unsigned x = 1;
    unsigned period = 0;
    do {
      x = mul_slow(static_cast<Scalar>(x), static_cast<Scalar>(g));
      ++period;
    } while (x != 1);
    if (period != n) continue;
    x = 1;
    for (unsigned i = 0; i < n; ++i) {
      exp_[i] = static_cast<Scalar>(x);
      exp_[i + n] = static_cast<Scalar>(x);
      log_[x] = static_cast<int>(i);
      x = mul_slow(static_cast<Scalar>(x), static_cast<Scalar>(g));
    }
    return;
  }
}

Scalar Field::mul_slow(Scalar a, Scalar b) const {
  unsigned acc = 0;
  unsigned aa = a;
  for (unsigned bb = b; bb; bb >>= 1) {
    if (bb & 1) acc ^= aa;
    aa <<= 1;
    if (aa >> degree_ & 1) aa ^= modulus_;
  }
  return static_cast<Scalar>(acc);
}

Scalar Field::inv(Scalar a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (degree_ == 1) return 1;
  unsigned n = order() - 1;
  return exp_[(n - log_[a]) % n];
}

std::string Field::to_hex(Scalar a) const {
  std::ostringstream os;
  os << std::hex << static_cast<unsigned>(a);
  return os.str();
}

Scalar Field::from_hex(const std::string& text) const {
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty coefficient");
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &pos, 16);
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad coefficient '" + text + "'");
  }
  if (pos != text.size() || v >= order())
    throw Error(ErrorKind::ParseError, "coefficient '" + text + "' outside the field");
  return static_cast<Scalar>(v);
}

void axpy(const Field& f, Vec& y, Scalar a, const Vec& x) {
  if (a == 0) return;
  if (a == 1) {
    add_into(y, x);
    return;
  }
  for (std::size_t i = 0; i < y.size(); ++i) y[i] ^= f.mul(a, x[i]);
}

Vec scaled(const Field& f, Scalar a, const Vec& x) {
  Vec y(x.size(), 0);
  axpy(f, y, a, x);
  return y;
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace spo
