#include "superpoisson/deformations.hpp"

#include "superpoisson/checks.hpp"

namespace spo {
namespace {

bool even_poisson_cochain(const CochainSpace& s, const Vec& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] && s.coord_parity(i) != 0) return false;
  return is_zero(poisson_constraints(s).apply(s.field(), c));
}

void require_layers(const TruncatedDeformation& d, const CochainSpace& s2) {
  if (d.layers.empty()) throw Error(ErrorKind::ValidationError, "a deformation needs at least one layer");
  for (const Vec& l : d.layers)
    if (l.size() != s2.dim()) throw Error(ErrorKind::DimensionMismatch, "layer has the wrong number of coordinates");
}

std::string t_name(std::size_t j, const std::string& e) {
  if (j == 0) return e;
  return (j == 1 ? std::string("t") : "t^" + std::to_string(j)) + "*" + e;
}

}  // namespace

CochainSpace layer_space(const AlgebraBundle& p) { return CochainSpace(p, adjoint_module(p), 2); }

Vec layer_from_maps(const CochainSpace& s2, const BilinearTable& mu, const std::vector<Vec>& omega) {
  const std::size_t n = s2.algebra().dim();
  Vec c(s2.dim(), 0);
  for (std::size_t r = 0; r < s2.phi_tuples().size(); ++r) {
    const Tuple& t = s2.phi_tuples()[r];
    for (std::size_t m = 0; m < n; ++m) c[s2.phi_index(r, m)] = mu.at(t[0], t[1])[m];
  }
  for (std::size_t pos = 0; pos < s2.odd_basis().size(); ++pos)
    for (std::size_t m = 0; m < n; ++m) c[s2.omega_index(pos, 0, m)] = omega[s2.odd_basis()[pos]][m];
  return c;
}

Report check_infinitesimal(const TruncatedDeformation& d) {
  CochainSpace s2 = layer_space(d.base);
  require_layers(d, s2);
  Report r;
  const Vec& l = d.layers[0];
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l[i] && s2.coord_parity(i) != 0) r.fail("even layer", s2.coord_name(i), "odd coordinate set", "0");
  if (!is_zero(poisson_constraints(s2).apply(s2.field(), l)))
    r.fail("poisson cochain", "layer 1", "constraint residual nonzero", "0");
  Vec dl = coboundary_matrix(s2).apply(s2.field(), l);
  CochainSpace s3(d.base, s2.module(), 3);
  for (std::size_t i = 0; i < dl.size(); ++i)
    if (dl[i]) r.fail("cocycle", s3.coord_name(i), std::to_string(dl[i]), "0");
  return r;
}

Vec obstruction(const TruncatedDeformation& d) {
  const AlgebraBundle& p = d.base;
  CochainSpace s2 = layer_space(p);
  require_layers(d, s2);
  Report valid = check_poisson(deformed_bundle(d));
  if (!valid.ok()) throw Error(ErrorKind::NotADeformation, valid.summary());
  const std::size_t n = p.dim(), k = d.order();
  auto mu = [&](std::size_t i, const Vec& x, const Vec& y) { return eval_phi(s2, d.layers[i - 1], {x, y}); };
  auto om = [&](std::size_t i, const Vec& x) { return eval_omega(s2, d.layers[i - 1], x, {}); };
  CochainSpace s3(p, s2.module(), 3);
  Vec out(s3.dim(), 0);
  for (std::size_t r = 0; r < s3.phi_tuples().size(); ++r) {
    const Tuple& t = s3.phi_tuples()[r];
    Vec x = p.basis(t[0]), y = p.basis(t[1]), z = p.basis(t[2]);
    Vec v(n, 0);
    for (std::size_t i = 1; i <= k; ++i) {
      std::size_t j = k + 1 - i;
      add_into(v, mu(i, x, mu(j, y, z)));
      add_into(v, mu(i, y, mu(j, z, x)));
      add_into(v, mu(i, z, mu(j, x, y)));
    }
    for (std::size_t m = 0; m < n; ++m) out[s3.phi_index(r, m)] = v[m];
  }
  for (std::size_t pos = 0; pos < s3.odd_basis().size(); ++pos) {
    Vec x = p.basis(s3.odd_basis()[pos]);
    for (std::size_t r = 0; r < s3.omega_tuples().size(); ++r) {
      Vec y = p.basis(s3.omega_tuples()[r][0]);
      Vec v(n, 0);
      for (std::size_t i = 1; i <= k; ++i) {
        std::size_t j = k + 1 - i;
        add_into(v, mu(i, y, om(j, x)));
        add_into(v, mu(i, x, mu(j, x, y)));
      }
      for (std::size_t m = 0; m < n; ++m) out[s3.omega_index(pos, r, m)] = v[m];
    }
  }
  return out;
}

bool check_extension(const TruncatedDeformation& d, const Vec& next) {
  CochainSpace s2 = layer_space(d.base);
  if (next.size() != s2.dim()) throw Error(ErrorKind::DimensionMismatch, "layer has the wrong number of coordinates");
  if (!even_poisson_cochain(s2, next)) return false;
  return obstruction(d) == coboundary_matrix(s2).apply(s2.field(), next);
}

std::optional<Vec> find_extension(const TruncatedDeformation& d) {
  CochainSpace s2 = layer_space(d.base);
  const Field& f = s2.field();
  Vec ob = obstruction(d);
  std::vector<Vec> basis = poisson_subspace(d.base, 2, 0);
  SparseMatrix dm = coboundary_matrix(s2);
  if (basis.empty()) {
    if (is_zero(ob)) return Vec(s2.dim(), 0);
    return std::nullopt;
  }
  std::vector<Vec> images;
  for (const Vec& b : basis) images.push_back(dm.apply(f, b));
  auto x = solve(f, Matrix::from_columns(ob.size(), images), ob);
  if (!x) return std::nullopt;
  Vec next(s2.dim(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if ((*x)[i]) axpy(f, next, (*x)[i], basis[i]);
  return next;
}

AlgebraBundle deformed_bundle(const TruncatedDeformation& d) {
  const AlgebraBundle& p = d.base;
  if (!p.is_poisson()) throw Error(ErrorKind::MissingStructure, "deformations need a Poisson superalgebra");
  CochainSpace s2 = layer_space(p);
  require_layers(d, s2);
  const Field& f = p.field;
  const std::size_t n = p.dim(), k = d.order(), dim = (k + 1) * n;
  std::vector<BasisVector> basis;
  for (std::size_t j = 0; j <= k; ++j)
    for (std::size_t i = 0; i < n; ++i) basis.push_back({t_name(j, p.space.name(i)), p.space.parity(i)});
  AlgebraBundle out = make_bundle(f, basis, p.name + "[t]/t^" + std::to_string(k + 1));
  out.product = BilinearTable(dim);
  out.bracket = BilinearTable(dim);
  out.squaring = std::vector<Vec>(dim, Vec(dim, 0));
  auto place = [&](Vec& target, std::size_t degree, const Vec& v) {
    if (degree > k) return;
    for (std::size_t m = 0; m < n; ++m) target[degree * n + m] ^= v[m];
  };
  // Layer 0 is the original bracket and squaring.
  std::vector<BilinearTable> mus{*p.bracket};
  std::vector<std::vector<Vec>> oms{*p.squaring};
  for (std::size_t l = 1; l <= k; ++l) {
    BilinearTable mu(n);
    std::vector<Vec> om(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) mu.set(i, j, eval_phi(s2, d.layers[l - 1], {p.basis(i), p.basis(j)}));
      if (p.space.parity(i) == 1) om[i] = eval_omega(s2, d.layers[l - 1], p.basis(i), {});
    }
    mus.push_back(std::move(mu));
    oms.push_back(std::move(om));
  }
  for (std::size_t a = 0; a <= k; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t u = a * n + i;
      for (std::size_t b = 0; b <= k; ++b)
        for (std::size_t j = 0; j < n; ++j) {
          const std::size_t v = b * n + j;
          place(out.product->at(u, v), a + b, p.product->at(i, j));
          for (std::size_t l = 0; l <= k; ++l) place(out.bracket->at(u, v), a + b + l, mus[l].at(i, j));
        }
      if (p.space.parity(i) == 1)
        for (std::size_t l = 0; l <= k; ++l) place((*out.squaring)[u], 2 * a + l, oms[l][i]);
    }
  if (p.unit) {
    out.unit = Vec(dim, 0);
    place(*out.unit, 0, *p.unit);
  }
  return out;
}

std::optional<Matrix> equivalent_order1(const AlgebraBundle& p, const Vec& a, const Vec& b) {
  CochainSpace s1(p, adjoint_module(p), 1), s2 = layer_space(p);
  if (a.size() != s2.dim() || b.size() != s2.dim()) throw Error(ErrorKind::DimensionMismatch, "layer size");
  std::vector<Vec> psis = poisson_subspace(p, 1, 0);
  SparseMatrix d1 = coboundary(s1, s2);
  const std::size_t n = p.dim();
  Vec target = a;
  add_into(target, b);
  Matrix psi(n, n);
  if (psis.empty()) {
    if (!is_zero(target)) return std::nullopt;
    return psi;
  }
  std::vector<Vec> cols;
  for (const Vec& v : psis) cols.push_back(d1.apply(p.field, v));
  auto coef = solve(p.field, Matrix::from_columns(s2.dim(), cols), target);
  if (!coef) return std::nullopt;
  Vec c(s1.dim(), 0);
  for (std::size_t j = 0; j < psis.size(); ++j)
    if ((*coef)[j]) axpy(p.field, c, (*coef)[j], psis[j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < n; ++m) psi(m, i) = c[s1.phi_index(i, m)];
  return psi;
}

}  // namespace spo
