#include "superpoisson/lie_rinehart.hpp"

#include "superpoisson/checks.hpp"

namespace spo {
namespace {

constexpr int kSamples = 24;

Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

Matrix combine(const Field& f, const std::vector<Matrix>& ops, const Vec& x, std::size_t rows, std::size_t cols) {
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) out(r, c) ^= f.mul(x[i], ops[i](r, c));
  }
  return out;
}

std::string matrix_text(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + std::to_string(m(i, j));
  }
  return s + "]";
}

Vec sum2(Vec a, const Vec& b) {
  add_into(a, b);
  return a;
}

// Coordinates of m in the span of `basis`; throws NotASubspace when outside.
Vec coordinates_in(const Field& f, const std::vector<Matrix>& basis, const Matrix& m) {
  std::vector<Vec> cols;
  for (const Matrix& b : basis) cols.push_back(flatten(b));
  Vec target = flatten(m);
  if (cols.empty()) {
    if (!is_zero(target)) throw Error(ErrorKind::NotASubspace, "operator outside the span");
    return {};
  }
  auto x = solve(f, Matrix::from_columns(target.size(), cols), target);
  if (!x) throw Error(ErrorKind::NotASubspace, "operator outside the span");
  return *x;
}

std::vector<BasisVector> joined_basis(const SuperSpace& a, const SuperSpace& b) {
  std::vector<BasisVector> out = a.basis();
  for (auto v : b.basis()) {
    while (a.index_of(v.name)) v.name += "'";
    out.push_back(v);
  }
  return out;
}

}  // namespace

Vec lr_act(const LieRinehartTriple& t, const Vec& a, const Vec& x) {
  const Field& f = t.lie.field;
  Vec out = t.lie.zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j]) axpy(f, out, f.mul(a[i], x[j]), t.action[i][j]);
  }
  return out;
}

Matrix lr_anchor(const LieRinehartTriple& t, const Vec& x) {
  return combine(t.algebra.field, t.anchor, x, t.algebra.dim(), t.algebra.dim());
}

Report check_lie_rinehart(const LieRinehartTriple& t, std::uint64_t seed) {
  const AlgebraBundle &A = t.algebra, &L = t.lie;
  const Field& f = A.field;
  const std::size_t na = A.dim(), nl = L.dim();
  if (t.action.size() != na || t.anchor.size() != nl) throw Error(ErrorKind::DimensionMismatch, "triple table sizes");
  Report r = check_associative_supercommutative(A);
  r.merge(check_lie(L, seed));
  auto expect = [&](const std::string& law, const std::string& w, const Vec& lhs, const Vec& rhs) {
    if (lhs != rhs) r.fail(law, w, format(L, lhs), format(L, rhs));
  };
  auto expect_a = [&](const std::string& law, const std::string& w, const Vec& lhs, const Vec& rhs) {
    if (lhs != rhs) r.fail(law, w, format(A, lhs), format(A, rhs));
  };
  auto expect_m = [&](const std::string& law, const std::string& w, const Matrix& lhs, const Matrix& rhs) {
    if (lhs != rhs) r.fail(law, w, matrix_text(lhs), matrix_text(rhs));
  };
  auto rho = [&](const Vec& x) { return lr_anchor(t, x); };
  auto la = [&](const Vec& a) { return left_mult(A, a); };

  // A-module structure on L.
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t x = 0; x < nl; ++x) {
      const Vec& v = t.action[a][x];
      if (!L.space.homogeneous(v, (A.space.parity(a) + L.space.parity(x)) & 1))
        r.fail("action grading", A.space.name(a) + "." + L.space.name(x), format(L, v), "homogeneous");
      for (std::size_t b = 0; b < na; ++b)
        expect("module associativity", A.space.name(a) + "," + A.space.name(b) + "," + L.space.name(x),
               lr_act(t, eval_product(A, A.basis(a), A.basis(b)), L.basis(x)),
               lr_act(t, A.basis(a), lr_act(t, A.basis(b), L.basis(x))));
    }
  if (A.unit)
    for (std::size_t x = 0; x < nl; ++x) expect("module unit", L.space.name(x), lr_act(t, *A.unit, L.basis(x)), L.basis(x));

  // Anchor lands in derivations of matching parity, and is a Lie morphism.
  for (std::size_t x = 0; x < nl; ++x) {
    auto par = operator_parity(A.space, t.anchor[x]);
    if (par && *par != L.space.parity(x)) r.fail("anchor parity", L.space.name(x), matrix_text(t.anchor[x]), "parity of x");
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < na; ++b) {
        Vec ea = A.basis(a), eb = A.basis(b);
        expect_a("anchor derivation", L.space.name(x) + " on " + A.space.name(a) + "," + A.space.name(b),
                 apply(f, t.anchor[x], eval_product(A, ea, eb)),
                 sum2(eval_product(A, apply(f, t.anchor[x], ea), eb), eval_product(A, ea, apply(f, t.anchor[x], eb))));
      }
    for (std::size_t y = 0; y < nl; ++y) {
      const Matrix &rx = t.anchor[x], &ry = t.anchor[y];
      expect_m("anchor bracket", L.space.name(x) + "," + L.space.name(y), rho(eval_bracket(L, L.basis(x), L.basis(y))),
               sum(multiply(f, rx, ry), multiply(f, ry, rx)));
    }
    if (L.space.parity(x) == 1)
      expect_m("anchor squaring", L.space.name(x), rho((*L.squaring)[x]), multiply(f, t.anchor[x], t.anchor[x]));
    for (std::size_t a = 0; a < na; ++a)
      expect_m("anchor A-linearity", A.space.name(a) + "." + L.space.name(x), rho(t.action[a][x]),
               multiply(f, la(A.basis(a)), t.anchor[x]));
  }

  // Compatibility of bracket and squaring with the A-action.
  auto compat = [&](const Vec& a, const Vec& x, const Vec& y, const std::string& w) {
    Vec lhs = eval_bracket(L, x, lr_act(t, a, y));
    Vec rhs = sum2(lr_act(t, a, eval_bracket(L, x, y)), lr_act(t, apply(f, rho(x), a), y));
    expect("bracket with action", w, lhs, rhs);
  };
  auto sq_compat = [&](const Vec& a, const Vec& x, int a_parity, const std::string& w) {
    Vec ax = lr_act(t, a, x);
    Vec rhs = lr_act(t, apply(f, rho(ax), a), x);
    if (a_parity == 0) add_into(rhs, lr_act(t, eval_product(A, a, a), eval_squaring(L, x)));
    expect("squaring with action", w, eval_squaring(L, ax), rhs);
  };
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t x = 0; x < nl; ++x) {
      for (std::size_t y = 0; y < nl; ++y)
        compat(A.basis(a), L.basis(x), L.basis(y), A.space.name(a) + "," + L.space.name(x) + "," + L.space.name(y));
      if (A.space.parity(a) != L.space.parity(x))
        sq_compat(A.basis(a), L.basis(x), A.space.parity(a), A.space.name(a) + "," + L.space.name(x));
    }
  if (r.ok() && na && nl) {
    std::mt19937_64 rng(seed + 5);
    for (int s = 0; s < kSamples; ++s) {
      Vec a = random_vector(f, na, rng), x = random_vector(f, nl, rng), y = random_vector(f, nl, rng);
      compat(a, x, y, "random a=" + format(A, a));
      for (int pa = 0; pa < 2; ++pa) {
        Vec ah = random_homogeneous(A, pa, rng), xh = random_homogeneous(L, 1 - pa, rng);
        sq_compat(ah, xh, pa, "random a=" + format(A, ah) + ", x=" + format(L, xh));
      }
    }
  }
  return r;
}

LieRinehartTriple der_triple(const AlgebraBundle& a) {
  if (!a.product) throw Error(ErrorKind::MissingStructure, "no product");
  const Field& f = a.field;
  const std::size_t n = a.dim();
  std::vector<Matrix> ders = derivation_space(a, Variant::Associative);
  const std::size_t m = ders.size();
  std::vector<BasisVector> basis;
  for (std::size_t i = 0; i < m; ++i) basis.push_back({"D" + std::to_string(i + 1), *operator_parity(a.space, ders[i])});
  AlgebraBundle lie = make_bundle(f, basis, "Der(" + a.name + ")");
  lie.bracket = BilinearTable(m);
  lie.squaring = std::vector<Vec>(m, Vec(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j)
      lie.bracket->set(i, j, coordinates_in(f, ders, sum(multiply(f, ders[i], ders[j]), multiply(f, ders[j], ders[i]))));
    if (basis[i].parity == 1) (*lie.squaring)[i] = coordinates_in(f, ders, multiply(f, ders[i], ders[i]));
  }
  LieRinehartTriple t{a, lie, {}, ders};
  t.action.assign(n, std::vector<Vec>(m));
  for (std::size_t i = 0; i < n; ++i) {
    Matrix la = left_mult(a, a.basis(i));
    for (std::size_t j = 0; j < m; ++j) t.action[i][j] = coordinates_in(f, ders, multiply(f, la, ders[j]));
  }
  return t;
}

AlgebraBundle lr_to_lie(const LieRinehartTriple& t) {
  const AlgebraBundle &A = t.algebra, &L = t.lie;
  const std::size_t na = A.dim(), nl = L.dim(), n = na + nl;
  AlgebraBundle out = make_bundle(A.field, joined_basis(A.space, L.space), A.name + "+" + L.name);
  out.bracket = BilinearTable(n);
  out.squaring = std::vector<Vec>(n, Vec(n, 0));
  for (std::size_t x = 0; x < nl; ++x) {
    for (std::size_t a = 0; a < na; ++a) {
      Vec v(n, 0);
      Vec img = t.anchor[x].column(a);
      std::copy(img.begin(), img.end(), v.begin());
      out.bracket->set(a, na + x, v);
    }
    for (std::size_t y = 0; y < nl; ++y) {
      Vec v(n, 0);
      const Vec& b = L.bracket->at(x, y);
      std::copy(b.begin(), b.end(), v.begin() + static_cast<std::ptrdiff_t>(na));
      out.bracket->at(na + x, na + y) = v;
    }
    if (L.space.parity(x) == 1) {
      Vec v(n, 0);
      const Vec& s = (*L.squaring)[x];
      std::copy(s.begin(), s.end(), v.begin() + static_cast<std::ptrdiff_t>(na));
      (*out.squaring)[na + x] = v;
    }
  }
  return out;
}

Report check_lr_module(const LRModule& m) {
  const LieRinehartTriple& t = m.triple;
  const AlgebraBundle &A = t.algebra, &L = t.lie;
  const Field& f = A.field;
  const std::size_t nv = m.space.dim();
  if (m.algebra_action.size() != A.dim() || m.pi.size() != L.dim())
    throw Error(ErrorKind::DimensionMismatch, "module operator count");
  Report r;
  auto expect = [&](const std::string& law, const std::string& w, const Matrix& lhs, const Matrix& rhs) {
    if (lhs != rhs) r.fail(law, w, matrix_text(lhs), matrix_text(rhs));
  };
  auto av = [&](const Vec& a) { return combine(f, m.algebra_action, a, nv, nv); };
  auto pi = [&](const Vec& x) { return combine(f, m.pi, x, nv, nv); };
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (std::size_t b = 0; b < A.dim(); ++b)
      expect("A-module", A.space.name(a) + "," + A.space.name(b), av(eval_product(A, A.basis(a), A.basis(b))),
             multiply(f, m.algebra_action[a], m.algebra_action[b]));
  if (A.unit) expect("A-module unit", "unit", av(*A.unit), Matrix::identity(nv));
  for (std::size_t x = 0; x < L.dim(); ++x) {
    for (std::size_t y = 0; y < L.dim(); ++y)
      expect("pi bracket", L.space.name(x) + "," + L.space.name(y), pi(eval_bracket(L, L.basis(x), L.basis(y))),
             sum(multiply(f, m.pi[x], m.pi[y]), multiply(f, m.pi[y], m.pi[x])));
    if (L.space.parity(x) == 1) expect("pi squaring", L.space.name(x), pi((*L.squaring)[x]), multiply(f, m.pi[x], m.pi[x]));
    for (std::size_t a = 0; a < A.dim(); ++a) {
      Matrix rho_a = av(apply(f, t.anchor[x], A.basis(a)));
      expect("anchor compatibility", L.space.name(x) + "," + A.space.name(a), multiply(f, m.pi[x], m.algebra_action[a]),
             sum(multiply(f, m.algebra_action[a], m.pi[x]), rho_a));
      expect("strong", A.space.name(a) + "." + L.space.name(x), pi(t.action[a][x]), multiply(f, m.algebra_action[a], m.pi[x]));
    }
  }
  return r;
}

bool is_strong(const LRModule& m) { return check_lr_module(m).ok(); }

LieRinehartTriple lr_module_semidirect(const LRModule& m) {
  Report r = check_lr_module(m);
  if (!r.ok()) {
    bool weak_ok = true;
    for (const auto& v : r.violations())
      if (v.law != "strong") weak_ok = false;
    if (weak_ok && r.count() == r.violations().size()) throw Error(ErrorKind::NotStrong, r.summary());
    throw Error(ErrorKind::ValidationError, r.summary());
  }
  const LieRinehartTriple& t = m.triple;
  const AlgebraBundle &A = t.algebra, &L = t.lie;
  const std::size_t nl = L.dim(), nv = m.space.dim(), n = nl + nv;
  LieRinehartTriple out{A, make_bundle(L.field, joined_basis(L.space, m.space), L.name + "+V"), {}, {}};
  AlgebraBundle& lv = out.lie;
  lv.bracket = BilinearTable(n);
  lv.squaring = std::vector<Vec>(n, Vec(n, 0));
  auto embed = [&](const Vec& x, std::size_t offset) {
    Vec v(n, 0);
    std::copy(x.begin(), x.end(), v.begin() + static_cast<std::ptrdiff_t>(offset));
    return v;
  };
  for (std::size_t x = 0; x < nl; ++x) {
    for (std::size_t y = 0; y < nl; ++y) lv.bracket->at(x, y) = embed(L.bracket->at(x, y), 0);
    for (std::size_t v = 0; v < nv; ++v) lv.bracket->set(x, nl + v, embed(m.pi[x].column(v), nl));
    (*lv.squaring)[x] = embed((*L.squaring)[x], 0);
  }
  out.action.assign(A.dim(), std::vector<Vec>(n));
  for (std::size_t a = 0; a < A.dim(); ++a) {
    for (std::size_t x = 0; x < nl; ++x) out.action[a][x] = embed(t.action[a][x], 0);
    for (std::size_t v = 0; v < nv; ++v) out.action[a][nl + v] = embed(m.algebra_action[a].column(v), nl);
  }
  out.anchor = t.anchor;
  for (std::size_t v = 0; v < nv; ++v) out.anchor.emplace_back(A.dim(), A.dim());
  return out;
}

namespace {

// Generator-space helpers for Omega: the element u dv has coordinate u_j v_i at (j, i).
Vec generator(const Field& f, std::size_t n, const Vec& u, const Vec& v) {
  Vec out(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (!u[j]) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i]) out[kaehler_generator(n, j, i)] ^= f.mul(u[j], v[i]);
  }
  return out;
}

// Left multiplication of a generator-space element by a in P.
Vec scale_generators(const AlgebraBundle& p, const Vec& a, const Vec& g) {
  const std::size_t n = p.dim();
  Vec out(n * n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Scalar c = g[kaehler_generator(n, j, i)];
      if (!c) continue;
      Vec coeff = eval_product(p, a, p.basis(j));
      for (std::size_t k = 0; k < n; ++k)
        if (coeff[k]) out[kaehler_generator(n, k, i)] ^= p.field.mul(c, coeff[k]);
    }
  return out;
}

// Bracket of generator-space elements, bilinear in the pairs (x dy, z dw).
Vec generator_bracket(const AlgebraBundle& p, const Vec& g, const Vec& h) {
  const Field& f = p.field;
  const std::size_t n = p.dim();
  Vec out(n * n, 0);
  for (std::size_t a = 0; a < n * n; ++a) {
    if (!g[a]) continue;
    for (std::size_t b = 0; b < n * n; ++b) {
      if (!h[b]) continue;
      Scalar c = f.mul(g[a], h[b]);
      Vec x = p.basis(a / n), y = p.basis(a % n), z = p.basis(b / n), w = p.basis(b % n);
      Vec term = generator(f, n, eval_product(p, x, z), eval_bracket(p, y, w));
      add_into(term, generator(f, n, eval_product(p, x, eval_bracket(p, y, z)), w));
      add_into(term, generator(f, n, eval_product(p, z, eval_bracket(p, w, x)), y));
      axpy(f, out, c, term);
    }
  }
  return out;
}

// Squaring of a single odd generator x dy.
Vec generator_square(const AlgebraBundle& p, std::size_t a) {
  const Field& f = p.field;
  const std::size_t n = p.dim();
  std::size_t xi = a / n, yi = a % n;
  Vec x = p.basis(xi), y = p.basis(yi);
  Vec out = generator(f, n, eval_product(p, x, eval_bracket(p, x, y)), y);
  if (p.space.parity(xi) == 0) add_into(out, generator(f, n, eval_product(p, x, x), eval_squaring(p, y)));
  return out;
}

// Squaring of an odd generator-space element via the polarization rule.
Vec generator_squaring(const AlgebraBundle& p, const Vec& g) {
  const Field& f = p.field;
  const std::size_t n = p.dim();
  Vec out(n * n, 0);
  std::vector<std::size_t> support;
  for (std::size_t a = 0; a < g.size(); ++a)
    if (g[a]) support.push_back(a);
  for (std::size_t s = 0; s < support.size(); ++s) {
    axpy(f, out, f.square(g[support[s]]), generator_square(p, support[s]));
    for (std::size_t t = s + 1; t < support.size(); ++t)
      axpy(f, out, f.mul(g[support[s]], g[support[t]]),
           generator_bracket(p, unit_vector(n * n, support[s]), unit_vector(n * n, support[t])));
  }
  return out;
}

Matrix generator_anchor(const AlgebraBundle& p, std::size_t a) {
  const std::size_t n = p.dim();
  return multiply(p.field, left_mult(p, p.basis(a / n)), ad(p, p.basis(a % n)));
}

int generator_parity(const AlgebraBundle& p, std::size_t a) {
  const std::size_t n = p.dim();
  return (p.space.parity(a / n) + p.space.parity(a % n)) & 1;
}

}  // namespace

Vec kaehler_project(const Kaehler& k, const Vec& g) {
  SpanBasis rel(k.triple.algebra.field, k.generator_dim);
  for (const Vec& r : k.relations) rel.insert(r);
  Vec red = rel.reduce(g);
  Vec out(k.representatives.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = red[k.representatives[i]];
  return out;
}

Kaehler kaehler(const AlgebraBundle& p) {
  if (!p.unit) throw Error(ErrorKind::NoUnit, "Kaehler differentials need a unit");
  Report pr = check_poisson(p);
  if (!pr.ok()) throw Error(ErrorKind::NotPoisson, pr.summary());
  const Field& f = p.field;
  const std::size_t n = p.dim(), g = n * n;
  Kaehler k;
  k.generator_dim = g;
  SpanBasis rel(f, g);
  std::vector<Vec> queue;
  auto d = [&](const Vec& v) { return generator(f, n, *p.unit, v); };
  auto push = [&](Vec v) {
    if (rel.insert(v)) queue.push_back(std::move(v));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec r = d(eval_product(p, p.basis(i), p.basis(j)));
      add_into(r, generator(f, n, p.basis(i), p.basis(j)));
      add_into(r, generator(f, n, p.basis(j), p.basis(i)));
      push(std::move(r));
    }
  push(d(*p.unit));
  while (!queue.empty()) {
    Vec v = std::move(queue.back());
    queue.pop_back();
    for (std::size_t a = 0; a < n; ++a) push(scale_generators(p, p.basis(a), v));
  }
  k.relations = rel.rows();
  std::vector<bool> pivot(g, false);
  for (std::size_t c : rel.pivots()) pivot[c] = true;
  for (std::size_t c = 0; c < g; ++c)
    if (!pivot[c]) k.representatives.push_back(c);

  const std::size_t m = k.representatives.size();
  auto name = [&](std::size_t c) { return p.space.name(c / n) + "*d" + p.space.name(c % n); };
  std::vector<BasisVector> basis;
  for (std::size_t c : k.representatives) basis.push_back({name(c), generator_parity(p, c)});
  AlgebraBundle omega = make_bundle(f, basis, "Omega(" + p.name + ")");
  omega.bracket = BilinearTable(m);
  omega.squaring = std::vector<Vec>(m, Vec(m, 0));
  std::vector<Vec> rep(m);
  for (std::size_t i = 0; i < m; ++i) rep[i] = unit_vector(g, k.representatives[i]);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) omega.bracket->set(i, j, kaehler_project(k, generator_bracket(p, rep[i], rep[j])));
    if (basis[i].parity == 1) (*omega.squaring)[i] = kaehler_project(k, generator_square(p, k.representatives[i]));
  }

  LieRinehartTriple& t = k.triple;
  t.algebra = p;
  t.lie = omega;
  t.action.assign(n, std::vector<Vec>(m));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < m; ++i) t.action[a][i] = kaehler_project(k, scale_generators(p, p.basis(a), rep[i]));
  for (std::size_t i = 0; i < m; ++i) t.anchor.push_back(generator_anchor(p, k.representatives[i]));

  // Structure maps must not see the choice of representative.
  for (const Vec& r : k.relations) {
    Matrix anchor_r(n, n);
    for (std::size_t c = 0; c < g; ++c)
      if (r[c]) anchor_r = sum(anchor_r, combine(f, {generator_anchor(p, c)}, Vec{r[c]}, n, n));
    if (!anchor_r.is_zero()) k.well_defined.fail("anchor on relations", "relation", matrix_text(anchor_r), "0");
    for (std::size_t c = 0; c < g; ++c) {
      Vec br = generator_bracket(p, r, unit_vector(g, c));
      if (!rel.contains(br)) k.well_defined.fail("bracket on relations", name(c), "outside relations", "relation");
    }
    bool odd = false, even = false;
    for (std::size_t c = 0; c < g; ++c)
      if (r[c]) (generator_parity(p, c) ? odd : even) = true;
    if (odd && !even && !rel.contains(generator_squaring(p, r)))
      k.well_defined.fail("squaring on relations", "odd relation", "outside relations", "relation");
  }
  return k;
}

Matrix kaehler_factor(const Kaehler& k, const Matrix& der) {
  const AlgebraBundle& p = k.triple.algebra;
  const Field& f = p.field;
  const std::size_t n = p.dim();
  auto hat = [&](const Vec& g) {
    Vec out(n, 0);
    for (std::size_t c = 0; c < g.size(); ++c)
      if (g[c]) axpy(f, out, g[c], eval_product(p, p.basis(c / n), der.column(c % n)));
    return out;
  };
  for (const Vec& r : k.relations)
    if (!is_zero(hat(r))) throw Error(ErrorKind::NotASubspace, "derivation does not vanish on the relations");
  Matrix out(n, k.representatives.size());
  for (std::size_t i = 0; i < k.representatives.size(); ++i)
    out.set_column(i, hat(unit_vector(k.generator_dim, k.representatives[i])));
  return out;
}

}  // namespace spo
