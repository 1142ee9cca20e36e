#include "superpoisson/checks.hpp"

#include <sstream>

namespace spo {
namespace {

constexpr int kSamples = 24;

std::string tuple_name(const AlgebraBundle& a, std::initializer_list<std::size_t> idx) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (std::size_t i : idx) {
    if (!first) os << ", ";
    first = false;
    os << a.space.name(i);
  }
  os << ")";
  return os.str();
}

void expect_equal(Report& r, const AlgebraBundle& a, const std::string& law, const std::string& witness,
                  const Vec& lhs, const Vec& rhs) {
  if (lhs != rhs) r.fail(law, witness, format(a, lhs), format(a, rhs));
}

void check_table_grading(Report& r, const AlgebraBundle& a, const BilinearTable& t, const std::string& what,
                         bool diagonal_odd_zero, bool diagonal_even_zero) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& v = t.at(i, j);
      int p = (a.space.parity(i) + a.space.parity(j)) & 1;
      if (!a.space.homogeneous(v, p)) r.fail(what + " grading", tuple_name(a, {i, j}), format(a, v), "parity " + std::to_string(p));
      if (t.at(j, i) != v && i < j) r.fail(what + " symmetry", tuple_name(a, {i, j}), format(a, v), format(a, t.at(j, i)));
    }
    bool odd = a.space.parity(i) == 1;
    if (((odd && diagonal_odd_zero) || (!odd && diagonal_even_zero)) && !is_zero(t.at(i, i)))
      r.fail(what + " diagonal", tuple_name(a, {i, i}), format(a, t.at(i, i)), "0");
  }
}

Vec sum3(Vec a, const Vec& b, const Vec& c) {
  add_into(a, b);
  add_into(a, c);
  return a;
}

Vec sum2(Vec a, const Vec& b) {
  add_into(a, b);
  return a;
}

// Maps are flattened row-major: entry (i, j) sits at index i * n + j.
Vec flatten(const Matrix& m) {
  Vec v(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
  return v;
}

// Stacked residuals of the derivation identities; linear in d.
Vec derivation_residual(const AlgebraBundle& a, const Matrix& d, Variant v) {
  const Field& f = a.field;
  const std::size_t n = a.dim();
  Vec out;
  auto push = [&](const Vec& x) { out.insert(out.end(), x.begin(), x.end()); };
  std::vector<Vec> img(n);
  for (std::size_t j = 0; j < n; ++j) img[j] = d.column(j);
  if (v != Variant::Lie) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        push(sum3(apply(f, d, a.product->at(i, j)), eval_product(a, img[i], a.basis(j)),
                  eval_product(a, a.basis(i), img[j])));
  }
  if (v != Variant::Associative) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        push(sum3(apply(f, d, a.bracket->at(i, j)), eval_bracket(a, img[i], a.basis(j)),
                  eval_bracket(a, a.basis(i), img[j])));
    for (std::size_t i : a.space.indices(1))
      push(sum2(apply(f, d, (*a.squaring)[i]), eval_bracket(a, img[i], a.basis(i))));
  }
  return out;
}

void require(const AlgebraBundle& a, Variant v) {
  if (v != Variant::Lie && !a.product) throw Error(ErrorKind::MissingStructure, "no product");
  if (v != Variant::Associative && !a.is_lie()) throw Error(ErrorKind::MissingStructure, "no bracket or squaring");
}

}  // namespace

Report check_lie(const AlgebraBundle& a, std::uint64_t seed) {
  require(a, Variant::Lie);
  Report r;
  const std::size_t n = a.dim();
  check_table_grading(r, a, *a.bracket, "bracket", true, true);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& s = (*a.squaring)[i];
    if (a.space.parity(i) == 0 && !is_zero(s)) r.fail("squaring domain", tuple_name(a, {i}), format(a, s), "0");
    if (a.space.parity(i) == 1 && !a.space.homogeneous(s, 0))
      r.fail("squaring grading", tuple_name(a, {i}), format(a, s), "even element");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = a.basis(i), y = a.basis(j), z = a.basis(k);
        Vec lhs = sum3(eval_bracket(a, x, eval_bracket(a, y, z)), eval_bracket(a, y, eval_bracket(a, x, z)),
                       eval_bracket(a, eval_bracket(a, x, y), z));
        if (!is_zero(lhs)) r.fail("jacobi", tuple_name(a, {i, j, k}), format(a, lhs), "0");
      }
  for (std::size_t i : a.space.indices(1))
    for (std::size_t j = 0; j < n; ++j) {
      Vec x = a.basis(i), y = a.basis(j);
      expect_equal(r, a, "squaring jacobi", tuple_name(a, {i, j}), eval_bracket(a, (*a.squaring)[i], y),
                   eval_bracket(a, x, eval_bracket(a, x, y)));
    }
  if (!a.space.indices(1).empty()) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < kSamples; ++t) {
      Vec x = random_homogeneous(a, 1, rng), y = random_homogeneous(a, 1, rng);
      Scalar lam = random_vector(a.field, 1, rng)[0];
      std::string w = "x=" + format(a, x) + ", y=" + format(a, y);
      expect_equal(r, a, "squaring semilinearity", w, eval_squaring(a, scaled(a.field, lam, x)),
                   scaled(a.field, a.field.square(lam), eval_squaring(a, x)));
      expect_equal(r, a, "squaring polarization", w,
                   sum3(eval_squaring(a, sum2(x, y)), eval_squaring(a, x), eval_squaring(a, y)), eval_bracket(a, x, y));
    }
  }
  return r;
}

Report check_associative_supercommutative(const AlgebraBundle& a) {
  require(a, Variant::Associative);
  Report r;
  const std::size_t n = a.dim();
  check_table_grading(r, a, *a.product, "product", true, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = a.basis(i), y = a.basis(j), z = a.basis(k);
        expect_equal(r, a, "associativity", tuple_name(a, {i, j, k}), eval_product(a, eval_product(a, x, y), z),
                     eval_product(a, x, eval_product(a, y, z)));
      }
  if (a.unit) {
    if (!a.space.homogeneous(*a.unit, 0)) r.fail("unit grading", "unit", format(a, *a.unit), "even element");
    for (std::size_t i = 0; i < n; ++i) {
      Vec x = a.basis(i);
      expect_equal(r, a, "unit", tuple_name(a, {i}), eval_product(a, *a.unit, x), x);
    }
  }
  return r;
}

Report check_poisson(const AlgebraBundle& a, std::uint64_t seed) {
  require(a, Variant::Poisson);
  Report r = check_lie(a, seed);
  r.merge(check_associative_supercommutative(a));
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = a.basis(i), y = a.basis(j), z = a.basis(k);
        expect_equal(r, a, "leibniz", tuple_name(a, {i, j, k}), eval_bracket(a, eval_product(a, x, y), z),
                     sum2(eval_product(a, x, eval_bracket(a, y, z)), eval_product(a, eval_bracket(a, x, z), y)));
      }
  auto compat = [&](const Vec& x, const Vec& y, const std::string& w) {
    Vec xy = eval_product(a, x, y);
    Vec rhs = sum2(eval_product(a, eval_product(a, x, x), eval_squaring(a, y)),
                   eval_product(a, xy, eval_bracket(a, x, y)));
    expect_equal(r, a, "squaring of product", w, eval_squaring(a, xy), rhs);
  };
  for (std::size_t i : a.space.indices(0))
    for (std::size_t j : a.space.indices(1)) compat(a.basis(i), a.basis(j), tuple_name(a, {i, j}));
  if (!a.space.indices(1).empty()) {
    std::mt19937_64 rng(seed + 17);
    for (int t = 0; t < kSamples; ++t) {
      Vec x = random_homogeneous(a, 0, rng), y = random_homogeneous(a, 1, rng);
      compat(x, y, "x=" + format(a, x) + ", y=" + format(a, y));
    }
  }
  return r;
}

std::optional<int> operator_parity(const SuperSpace& s, const Matrix& m) {
  bool ev = false, od = false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j)) (s.parity(i) == s.parity(j) ? ev : od) = true;
  if (ev == od) return std::nullopt;
  return od ? 1 : 0;
}

Report check_derivation(const AlgebraBundle& a, const Matrix& d, Variant v, std::uint64_t seed) {
  require(a, v);
  Report r;
  const Field& f = a.field;
  const std::size_t n = a.dim();
  if (d.rows() != n || d.cols() != n) throw Error(ErrorKind::DimensionMismatch, "derivation size");
  std::vector<Vec> img(n);
  for (std::size_t j = 0; j < n; ++j) img[j] = d.column(j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec x = a.basis(i), y = a.basis(j);
      if (v != Variant::Lie)
        expect_equal(r, a, "product rule", tuple_name(a, {i, j}), apply(f, d, eval_product(a, x, y)),
                     sum2(eval_product(a, img[i], y), eval_product(a, x, img[j])));
      if (v != Variant::Associative)
        expect_equal(r, a, "bracket rule", tuple_name(a, {i, j}), apply(f, d, eval_bracket(a, x, y)),
                     sum2(eval_bracket(a, img[i], y), eval_bracket(a, x, img[j])));
    }
  if (v != Variant::Associative) {
    for (std::size_t i : a.space.indices(1))
      expect_equal(r, a, "squaring rule", tuple_name(a, {i}), apply(f, d, (*a.squaring)[i]),
                   eval_bracket(a, img[i], a.basis(i)));
    if (!a.space.indices(1).empty()) {
      std::mt19937_64 rng(seed);
      for (int t = 0; t < kSamples; ++t) {
        Vec x = random_homogeneous(a, 1, rng);
        expect_equal(r, a, "squaring rule", format(a, x), apply(f, d, eval_squaring(a, x)),
                     eval_bracket(a, apply(f, d, x), x));
      }
    }
  }
  return r;
}

std::vector<Matrix> derivation_space(const AlgebraBundle& a, Variant v, int parity) {
  require(a, v);
  const std::size_t n = a.dim();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (((a.space.parity(i) + a.space.parity(j)) & 1) == parity) slots.emplace_back(i, j);
  std::vector<Vec> cols;
  for (auto [i, j] : slots) {
    Matrix e(n, n);
    e(i, j) = 1;
    cols.push_back(derivation_residual(a, e, v));
  }
  std::size_t rows = cols.empty() ? 0 : cols[0].size();
  Matrix sys = Matrix::from_columns(rows, cols);
  std::vector<Matrix> out;
  for (const Vec& k : kernel_basis(a.field, sys)) {
    Matrix m(n, n);
    for (std::size_t t = 0; t < slots.size(); ++t) m(slots[t].first, slots[t].second) = k[t];
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> derivation_space(const AlgebraBundle& a, Variant v) {
  auto out = derivation_space(a, v, 0);
  auto odd = derivation_space(a, v, 1);
  out.insert(out.end(), odd.begin(), odd.end());
  return out;
}

bool span_contains(const Field& f, const std::vector<Matrix>& basis, const Matrix& m) {
  if (basis.empty()) return m.is_zero();
  SpanBasis span(f, m.rows() * m.cols());
  for (const Matrix& b : basis) span.insert(flatten(b));
  return span.contains(flatten(m));
}

std::vector<Vec> center(const AlgebraBundle& a) {
  if (!a.bracket) throw Error(ErrorKind::MissingStructure, "no bracket");
  const std::size_t n = a.dim();
  std::vector<Vec> cols(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const Vec& b = a.bracket->at(j, i);
      cols[j].insert(cols[j].end(), b.begin(), b.end());
    }
  return kernel_basis(a.field, Matrix::from_columns(n * n, cols));
}

AlgebraBundle twist_squaring(const AlgebraBundle& a, const std::vector<Vec>& g) {
  require(a, Variant::Lie);
  if (g.size() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "twist size");
  AlgebraBundle out = a;
  for (std::size_t i : a.space.indices(1)) {
    if (!a.space.homogeneous(g[i], 0)) throw Error(ErrorKind::NotEven, "twist value for " + a.space.name(i));
    add_into((*out.squaring)[i], g[i]);
  }
  return out;
}

AlgebraBundle build_squaring_from_basis(const AlgebraBundle& a, const std::vector<Vec>& y) {
  if (!a.bracket) throw Error(ErrorKind::MissingStructure, "no bracket");
  if (y.size() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "squaring data size");
  const Field& f = a.field;
  AlgebraBundle out = a;
  out.squaring = std::vector<Vec>(a.dim(), a.zero());
  for (std::size_t j : a.space.indices(1)) {
    if (!a.space.homogeneous(y[j], 0)) throw Error(ErrorKind::NotEven, "squaring value for " + a.space.name(j));
    Matrix adx = ad(a, a.basis(j));
    if (ad(a, y[j]) != multiply(f, adx, adx))
      throw Error(ErrorKind::AdSquareMismatch, "ad of " + format(a, y[j]) + " differs from ad(" + a.space.name(j) + ")^2");
    (*out.squaring)[j] = y[j];
  }
  return out;
}

AlgebraBundle assoc_to_lie(const AlgebraBundle& a) {
  require(a, Variant::Associative);
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = a.basis(i), y = a.basis(j), z = a.basis(k);
        if (eval_product(a, eval_product(a, x, y), z) != eval_product(a, x, eval_product(a, y, z)))
          throw Error(ErrorKind::NotAssociative, "at " + tuple_name(a, {i, j, k}));
      }
  AlgebraBundle out = make_bundle(a.field, a.space.basis(), a.name);
  out.bracket = BilinearTable(n);
  out.squaring = std::vector<Vec>(n, a.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.bracket->set(i, j, sum2(a.product->at(i, j), a.product->at(j, i)));
    if (a.space.parity(i) == 1) (*out.squaring)[i] = a.product->at(i, i);
  }
  return out;
}

Report check_morphism(const AlgebraBundle& a, const AlgebraBundle& b, const Matrix& phi, Variant v) {
  require(a, v);
  require(b, v);
  if (phi.rows() != b.dim() || phi.cols() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "morphism size");
  for (std::size_t i = 0; i < phi.rows(); ++i)
    for (std::size_t j = 0; j < phi.cols(); ++j)
      if (phi(i, j) && b.space.parity(i) != a.space.parity(j))
        throw Error(ErrorKind::NotEven, "map sends " + a.space.name(j) + " to the other parity");
  Report r;
  const Field& f = a.field;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec x = a.basis(i), y = a.basis(j);
      Vec px = phi.column(i), py = phi.column(j);
      if (v != Variant::Lie)
        expect_equal(r, b, "product", tuple_name(a, {i, j}), apply(f, phi, eval_product(a, x, y)), eval_product(b, px, py));
      if (v != Variant::Associative)
        expect_equal(r, b, "bracket", tuple_name(a, {i, j}), apply(f, phi, eval_bracket(a, x, y)), eval_bracket(b, px, py));
    }
  if (v != Variant::Associative)
    for (std::size_t i : a.space.indices(1))
      expect_equal(r, b, "squaring", tuple_name(a, {i}), apply(f, phi, (*a.squaring)[i]), eval_squaring(b, phi.column(i)));
  return r;
}

Report check_ideal(const AlgebraBundle& a, const std::vector<Vec>& ideal, Variant v) {
  require(a, v);
  SpanBasis span(a.field, a.dim());
  for (const Vec& h : ideal) {
    if (!a.space.parity_of(h) && !is_zero(h)) throw Error(ErrorKind::ValidationError, "ideal generator " + format(a, h) + " is not homogeneous");
    span.insert(h);
  }
  Report r;
  auto inside = [&](const std::string& law, const Vec& h, const Vec& val, const std::string& w) {
    if (!span.contains(val)) r.fail(law, "h=" + format(a, h) + w, format(a, val), "element of the ideal");
  };
  for (const Vec& h : ideal) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      std::string w = ", x=" + a.space.name(i);
      if (v != Variant::Lie) inside("product closure", h, eval_product(a, a.basis(i), h), w);
      if (v != Variant::Associative) inside("bracket closure", h, eval_bracket(a, a.basis(i), h), w);
    }
    if (v != Variant::Associative && a.space.parity_of(h) == 1) inside("squaring closure", h, eval_squaring(a, h), "");
  }
  return r;
}

AlgebraBundle quotient(const AlgebraBundle& a, const std::vector<Vec>& ideal, Variant v) {
  Report r = check_ideal(a, ideal, v);
  if (!r.ok()) throw Error(ErrorKind::NotAnIdeal, r.summary());
  SpanBasis span(a.field, a.dim());
  for (const Vec& h : ideal) span.insert(h);
  std::vector<bool> pivot(a.dim(), false);
  for (std::size_t p : span.pivots()) pivot[p] = true;
  std::vector<std::size_t> keep;
  std::vector<BasisVector> basis;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!pivot[i]) {
      keep.push_back(i);
      basis.push_back(a.space.basis()[i]);
    }
  auto project = [&](const Vec& x) {
    Vec red = span.reduce(x);
    Vec out(keep.size());
    for (std::size_t t = 0; t < keep.size(); ++t) out[t] = red[keep[t]];
    return out;
  };
  const std::size_t m = keep.size();
  AlgebraBundle out = make_bundle(a.field, basis, a.name.empty() ? std::string() : a.name + "/I");
  auto induce = [&](const BilinearTable& t) {
    BilinearTable q(m, t.symmetry());
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) q.at(i, j) = project(t.at(keep[i], keep[j]));
    return q;
  };
  if (a.product) out.product = induce(*a.product);
  if (a.bracket) out.bracket = induce(*a.bracket);
  if (a.squaring) {
    out.squaring = std::vector<Vec>(m);
    for (std::size_t i = 0; i < m; ++i) (*out.squaring)[i] = project((*a.squaring)[keep[i]]);
  }
  if (a.unit) out.unit = project(*a.unit);
  return out;
}

}  // namespace spo
