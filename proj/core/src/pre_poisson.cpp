#include "superpoisson/pre_poisson.hpp"

#include "superpoisson/checks.hpp"

namespace spo {
namespace {

constexpr int kSamples = 24;
constexpr std::size_t kSearchDim = 4;

Vec plus(Vec x, const Vec& y) {
  add_into(x, y);
  return x;
}

Vec random_of_parity(const Field& f, const SuperSpace& s, int parity, std::mt19937_64& rng) {
  Vec v = random_vector(f, s.dim(), rng);
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (s.parity(i) != parity) v[i] = 0;
  return v;
}

void check_grading(const TwoProductBundle& b, const BilinearTable& t, const std::string& what, Report& r) {
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      const Vec& v = t.at(i, j);
      if (!is_zero(v) && !b.space.homogeneous(v, (b.space.parity(i) + b.space.parity(j)) & 1))
        r.fail(what + " grading", b.space.name(i) + "," + b.space.name(j), format(b.field, b.space, v), "homogeneous");
    }
}

}  // namespace

TwoProductBundle make_two_product(const Field& f, const SuperSpace& s, std::string name) {
  return {f, s, BilinearTable(s.dim(), Symmetry::None), BilinearTable(s.dim(), Symmetry::None), std::move(name)};
}

Vec eval_star(const TwoProductBundle& b, const Vec& x, const Vec& y) { return bilinear(b.field, b.star, x, y); }
Vec eval_triangle(const TwoProductBundle& b, const Vec& x, const Vec& y) { return bilinear(b.field, b.triangle, x, y); }

Report check_zinbiel(const TwoProductBundle& b, std::uint64_t seed) {
  Report r;
  check_grading(b, b.star, "star", r);
  auto st = [&](const Vec& x, const Vec& y) { return eval_star(b, x, y); };
  auto expect = [&](const std::string& law, const std::string& w, const Vec& lhs, const Vec& rhs) {
    if (lhs != rhs) r.fail(law, w, format(b.field, b.space, lhs), format(b.field, b.space, rhs));
  };
  const std::size_t n = b.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = b.basis(i), y = b.basis(j), z = b.basis(k);
        std::string w = b.space.name(i) + "," + b.space.name(j) + "," + b.space.name(k);
        expect("zinbiel", w, st(x, st(y, z)), plus(st(st(y, x), z), st(st(x, y), z)));
        expect("left commutativity", w, st(x, st(y, z)), st(y, st(x, z)));
      }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < kSamples && n; ++s) {
    Vec x = random_vector(b.field, n, rng), z = random_vector(b.field, n, rng);
    expect("x*(x*z) = 0", "random x=" + format(b.field, b.space, x), st(x, st(x, z)), b.zero());
  }
  return r;
}

AlgebraBundle zinbiel_to_assoc(const TwoProductBundle& b) {
  AlgebraBundle a = make_bundle(b.field, b.space.basis(), b.name);
  a.product = BilinearTable(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i; j < b.dim(); ++j) a.product->set(i, j, plus(b.star.at(i, j), b.star.at(j, i)));
  return a;
}

std::optional<std::size_t> zinbiel_nilpotency_index(const TwoProductBundle& b) {
  const std::size_t n = b.dim();
  std::vector<Vec> level;
  for (std::size_t i = 0; i < n; ++i) level.push_back(b.basis(i));
  for (std::size_t k = 1; k <= n + 1; ++k) {
    SpanBasis span(b.field, n);
    for (const Vec& v : level) span.insert(v);
    if (span.rank() == 0) return k;
    std::vector<Vec> next;
    for (std::size_t i = 0; i < n; ++i)
      for (const Vec& v : span.rows()) next.push_back(eval_star(b, b.basis(i), v));
    level = std::move(next);
  }
  return std::nullopt;
}

Report check_left_symmetric(const TwoProductBundle& b, std::uint64_t seed) {
  Report r;
  check_grading(b, b.triangle, "triangle", r);
  auto tr = [&](const Vec& x, const Vec& y) { return eval_triangle(b, x, y); };
  auto expect = [&](const std::string& law, const std::string& w, const Vec& lhs, const Vec& rhs) {
    if (lhs != rhs) r.fail(law, w, format(b.field, b.space, lhs), format(b.field, b.space, rhs));
  };
  const std::size_t n = b.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec x = b.basis(i), y = b.basis(j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec z = b.basis(k);
        expect("left symmetry", b.space.name(i) + "," + b.space.name(j) + "," + b.space.name(k),
               plus(tr(x, tr(y, z)), tr(tr(x, y), z)), plus(tr(y, tr(x, z)), tr(tr(y, x), z)));
      }
      if (b.space.parity(i) == 1)
        expect("odd left symmetry", b.space.name(i) + "," + b.space.name(j), tr(x, tr(x, y)), tr(tr(x, x), y));
    }
  if (!b.space.indices(1).empty()) {
    std::mt19937_64 rng(seed);
    for (int s = 0; s < kSamples; ++s) {
      Vec x = random_of_parity(b.field, b.space, 1, rng), y = random_vector(b.field, n, rng);
      expect("odd left symmetry", "random x=" + format(b.field, b.space, x), tr(x, tr(x, y)), tr(tr(x, x), y));
    }
  }
  return r;
}

AlgebraBundle lss_to_lie(const TwoProductBundle& b) {
  AlgebraBundle a = make_bundle(b.field, b.space.basis(), b.name);
  const std::size_t n = b.dim();
  a.bracket = BilinearTable(n);
  a.squaring = std::vector<Vec>(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) a.bracket->set(i, j, plus(b.triangle.at(i, j), b.triangle.at(j, i)));
    if (b.space.parity(i) == 1) (*a.squaring)[i] = b.triangle.at(i, i);
  }
  return a;
}

Report check_pre_poisson(const TwoProductBundle& b, std::uint64_t seed) {
  Report r = check_zinbiel(b, seed);
  r.merge(check_left_symmetric(b, seed));
  auto st = [&](const Vec& x, const Vec& y) { return eval_star(b, x, y); };
  auto tr = [&](const Vec& x, const Vec& y) { return eval_triangle(b, x, y); };
  auto expect = [&](const std::string& law, const std::string& w, const Vec& lhs, const Vec& rhs) {
    if (lhs != rhs) r.fail(law, w, format(b.field, b.space, lhs), format(b.field, b.space, rhs));
  };
  const std::size_t n = b.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = b.basis(i), y = b.basis(j), z = b.basis(k);
        std::string w = b.space.name(i) + "," + b.space.name(j) + "," + b.space.name(k);
        expect("bracket-star compatibility", w, st(plus(tr(x, y), tr(y, x)), z), plus(tr(x, st(y, z)), st(y, tr(x, z))));
        expect("product-triangle compatibility", w, tr(plus(st(x, y), st(y, x)), z), plus(st(x, tr(y, z)), st(y, tr(x, z))));
      }
  return r;
}

AlgebraBundle pre_poisson_to_poisson(const TwoProductBundle& b) {
  AlgebraBundle a = lss_to_lie(b);
  a.product = zinbiel_to_assoc(b).product;
  return a;
}

Report check_rota_baxter(const AlgebraBundle& a, const Matrix& r, RotaBaxterVariant v, std::uint64_t seed) {
  const Field& f = a.field;
  const std::size_t n = a.dim();
  if (r.rows() != n || r.cols() != n) throw Error(ErrorKind::DimensionMismatch, "operator size");
  if (!r.is_zero() && operator_parity(a.space, r) != 0) throw Error(ErrorKind::NotEven, "Rota-Baxter operator must be even");
  Report rep;
  auto R = [&](const Vec& x) { return apply(f, r, x); };
  auto expect = [&](const std::string& law, const std::string& w, const Vec& lhs, const Vec& rhs) {
    if (lhs != rhs) rep.fail(law, w, format(a, lhs), format(a, rhs));
  };
  if (v == RotaBaxterVariant::Associative) {
    if (!a.product) throw Error(ErrorKind::MissingStructure, "product");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec x = a.basis(i), y = a.basis(j);
        expect("associative Rota-Baxter", a.space.name(i) + "," + a.space.name(j), eval_product(a, R(x), R(y)),
               R(plus(eval_product(a, R(x), y), eval_product(a, x, R(y)))));
      }
    return rep;
  }
  if (!a.is_lie()) throw Error(ErrorKind::MissingStructure, "Lie structure");
  for (std::size_t i = 0; i < n; ++i) {
    Vec x = a.basis(i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec y = a.basis(j);
      expect("Lie Rota-Baxter", a.space.name(i) + "," + a.space.name(j), eval_bracket(a, R(x), R(y)),
             R(plus(eval_bracket(a, R(x), y), eval_bracket(a, x, R(y)))));
    }
  }
  auto square_law = [&](const Vec& x, const std::string& w) {
    expect("Rota-Baxter squaring", w, eval_squaring(a, R(x)), R(eval_bracket(a, R(x), x)));
  };
  for (std::size_t i : a.space.indices(1)) square_law(a.basis(i), a.space.name(i));
  if (!a.space.indices(1).empty()) {
    std::mt19937_64 rng(seed);
    for (int s = 0; s < kSamples; ++s) {
      Vec x = random_homogeneous(a, 1, rng);
      square_law(x, "random x=" + format(a, x));
    }
  }
  return rep;
}

TwoProductBundle rota_baxter_to_pre_poisson(const AlgebraBundle& p, const Matrix& r) {
  if (!p.is_poisson()) throw Error(ErrorKind::MissingStructure, "Poisson structure");
  Report rep = check_rota_baxter(p, r, RotaBaxterVariant::Associative);
  rep.merge(check_rota_baxter(p, r, RotaBaxterVariant::Lie));
  if (!rep.ok()) throw Error(ErrorKind::NotRotaBaxter, rep.summary());
  const Field& f = p.field;
  const std::size_t n = p.dim();
  TwoProductBundle b = make_two_product(f, p.space, p.name);
  for (std::size_t i = 0; i < n; ++i) {
    Vec rx = apply(f, r, p.basis(i));
    for (std::size_t j = 0; j < n; ++j) {
      b.star.at(i, j) = eval_product(p, rx, p.basis(j));
      b.triangle.at(i, j) = eval_bracket(p, rx, p.basis(j));
    }
  }
  return b;
}

std::vector<Matrix> rota_baxter_search(const AlgebraBundle& p) {
  if (!p.is_poisson()) throw Error(ErrorKind::MissingStructure, "Poisson structure");
  const std::size_t n = p.dim();
  if (n > kSearchDim) throw Error(ErrorKind::SizeBudgetExceeded, "exhaustive search is limited to dimension 4");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.space.parity(i) == p.space.parity(j)) slots.emplace_back(i, j);
  std::vector<Matrix> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Matrix r(n, n);
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1) r(slots[k].first, slots[k].second) = 1;
    if (check_rota_baxter(p, r, RotaBaxterVariant::Associative).ok() && check_rota_baxter(p, r, RotaBaxterVariant::Lie).ok())
      out.push_back(std::move(r));
  }
  return out;
}

}  // namespace spo
