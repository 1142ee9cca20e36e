#include "superpoisson/bundle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace spo {

SuperSpace::SuperSpace(std::vector<BasisVector> basis) : basis_(std::move(basis)) {
  std::set<std::string> seen;
  for (const auto& b : basis_) {
    if (b.parity != 0 && b.parity != 1)
      throw Error(ErrorKind::ValidationError, "parity of '" + b.name + "' must be 0 or 1");
    if (!seen.insert(b.name).second)
      throw Error(ErrorKind::ValidationError, "duplicate basis name '" + b.name + "'");
  }
}

std::optional<std::size_t> SuperSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

std::vector<std::size_t> SuperSpace::indices(int parity) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].parity == parity) out.push_back(i);
  return out;
}

std::optional<int> SuperSpace::parity_of(const Vec& v) const {
  bool ev = false, od = false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) (basis_[i].parity ? od : ev) = true;
  if (ev == od) return std::nullopt;
  return od ? 1 : 0;
}

bool SuperSpace::homogeneous(const Vec& v, int parity) const {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] && basis_[i].parity != parity) return false;
  return true;
}

bool SuperSpace::operator==(const SuperSpace& o) const {
  if (basis_.size() != o.basis_.size()) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name != o.basis_[i].name || basis_[i].parity != o.basis_[i].parity) return false;
  return true;
}

void BilinearTable::set(std::size_t i, std::size_t j, const Vec& v) {
  at(i, j) = v;
  if (sym_ == Symmetry::Symmetric) at(j, i) = v;
}

bool BilinearTable::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Vec& v) { return spo::is_zero(v); });
}

AlgebraBundle make_bundle(const Field& f, std::vector<BasisVector> basis, std::string name) {
  AlgebraBundle a{f, SuperSpace(std::move(basis)), {}, {}, {}, {}, std::move(name)};
  return a;
}

Vec bilinear(const Field& f, const BilinearTable& t, const Vec& x, const Vec& y) {
  Vec out(t.dim(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (!y[j]) continue;
      axpy(f, out, f.mul(x[i], y[j]), t.at(i, j));
    }
  }
  return out;
}

Vec eval_product(const AlgebraBundle& a, const Vec& x, const Vec& y) {
  if (!a.product) throw Error(ErrorKind::MissingStructure, "no product");
  return bilinear(a.field, *a.product, x, y);
}

Vec eval_bracket(const AlgebraBundle& a, const Vec& x, const Vec& y) {
  if (!a.bracket) throw Error(ErrorKind::MissingStructure, "no bracket");
  return bilinear(a.field, *a.bracket, x, y);
}

Vec eval_squaring(const AlgebraBundle& a, const Vec& x) {
  if (!a.squaring || !a.bracket) throw Error(ErrorKind::MissingStructure, "no squaring");
  if (!a.space.homogeneous(x, 1)) throw Error(ErrorKind::NotOddHomogeneous, format(a, x));
  const Field& f = a.field;
  Vec out = a.zero();
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) support.push_back(i);
  for (std::size_t p = 0; p < support.size(); ++p) {
    std::size_t i = support[p];
    axpy(f, out, f.square(x[i]), (*a.squaring)[i]);
    for (std::size_t q = p + 1; q < support.size(); ++q) {
      std::size_t j = support[q];
      axpy(f, out, f.mul(x[i], x[j]), a.bracket->at(i, j));
    }
  }
  return out;
}

Matrix left_mult(const AlgebraBundle& a, const Vec& x) {
  Matrix m(a.dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) m.set_column(j, eval_product(a, x, a.basis(j)));
  return m;
}

Matrix ad(const AlgebraBundle& a, const Vec& x) {
  Matrix m(a.dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) m.set_column(j, eval_bracket(a, x, a.basis(j)));
  return m;
}

std::string format(const Field& f, const SuperSpace& s, const Vec& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (v[i] != 1) os << f.to_hex(v[i]) << "*";
    os << s.name(i);
  }
  if (first) os << "0";
  return os.str();
}

std::string format(const AlgebraBundle& a, const Vec& v) { return format(a.field, a.space, v); }

Vec random_vector(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> dist(0, f.order() - 1);
  Vec v(n);
  for (auto& c : v) c = static_cast<Scalar>(dist(rng));
  return v;
}

Vec random_homogeneous(const AlgebraBundle& a, int parity, std::mt19937_64& rng) {
  Vec v = random_vector(a.field, a.dim(), rng);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (a.space.parity(i) != parity) v[i] = 0;
  return v;
}

void Report::fail(std::string law, std::string witness, std::string lhs, std::string rhs) {
  ++count_;
  if (kept_.size() < kKept)
    kept_.push_back({std::move(law), std::move(witness), std::move(lhs), std::move(rhs)});
  else if (!has_law(law))
    kept_.back() = {std::move(law), std::move(witness), std::move(lhs), std::move(rhs)};
}

void Report::merge(const Report& other) {
  for (const auto& v : other.kept_) {
    if (kept_.size() < kKept) kept_.push_back(v);
  }
  count_ += other.count_;
}

bool Report::has_law(const std::string& law) const {
  return std::any_of(kept_.begin(), kept_.end(), [&](const Violation& v) { return v.law == law; });
}

std::string Report::summary() const {
  std::ostringstream os;
  if (ok()) return "pass";
  os << count_ << " violation(s)";
  for (const auto& v : kept_) os << "\n  " << v.law << " at " << v.witness << ": " << v.lhs << " != " << v.rhs;
  return os.str();
}

}  // namespace spo
