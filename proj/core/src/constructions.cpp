#include "superpoisson/constructions.hpp"

#include "superpoisson/checks.hpp"

namespace spo {
namespace {

std::string pair_name(const AlgebraBundle& a, std::size_t i, std::size_t j) {
  return "(" + a.space.name(i) + ", " + a.space.name(j) + ")";
}

std::string matrix_text(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + std::to_string(m(i, j));
  }
  return s + "]";
}

// Restriction of an operator to the columns of one parity.
Matrix restrict_to(const Matrix& m, const SuperSpace& v, int parity) {
  Matrix out = m;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (v.parity(j) != parity)
      for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = 0;
  return out;
}

Vec kron(const Field& f, const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = f.mul(a[i], b[j]);
  }
  return out;
}

}  // namespace

Matrix operator_of(const Field& f, const std::vector<Matrix>& ops, const Vec& x, std::size_t rows) {
  Matrix out(rows, rows);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < rows; ++c) out(r, c) ^= f.mul(x[i], ops[i](r, c));
  }
  return out;
}

Report check_representation(const Representation& rep) {
  const AlgebraBundle& p = rep.algebra;
  const Field& f = p.field;
  const std::size_t n = p.dim(), m = rep.space.dim();
  if (rep.assoc.size() != n || rep.lie.size() != n) throw Error(ErrorKind::DimensionMismatch, "representation operator count");
  Report r;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto* ops : {&rep.assoc, &rep.lie}) {
      const Matrix& op = (*ops)[i];
      if (op.rows() != m || op.cols() != m) throw Error(ErrorKind::DimensionMismatch, "representation operator size");
      auto par = operator_parity(rep.space, op);
      if (par && *par != p.space.parity(i))
        r.fail("operator parity", p.space.name(i), matrix_text(op), "parity " + std::to_string(p.space.parity(i)));
    }
  }
  auto pi = [&](const Vec& x) { return operator_of(f, rep.assoc, x, m); };
  auto ga = [&](const Vec& x) { return operator_of(f, rep.lie, x, m); };
  auto mul = [&](const Matrix& a, const Matrix& b) { return multiply(f, a, b); };
  auto expect = [&](const std::string& law, const std::string& w, const Matrix& lhs, const Matrix& rhs) {
    if (lhs != rhs) r.fail(law, w, matrix_text(lhs), matrix_text(rhs));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec x = p.basis(i), y = p.basis(j);
      const Matrix &px = rep.assoc[i], &py = rep.assoc[j], &gx = rep.lie[i], &gy = rep.lie[j];
      std::string w = pair_name(p, i, j);
      expect("associative action", w, pi(eval_product(p, x, y)), mul(px, py));
      expect("lie action", w, ga(eval_bracket(p, x, y)), sum(mul(gx, gy), mul(gy, gx)));
      expect("action of product", w, ga(eval_product(p, x, y)), sum(mul(px, gy), mul(py, gx)));
      expect("action of bracket", w, pi(eval_bracket(p, x, y)), sum(mul(px, gy), mul(gy, px)));
    }
  if (p.unit) expect("unit action", "unit", pi(*p.unit), Matrix::identity(m));
  for (std::size_t i : p.space.indices(1)) {
    const Matrix& gx = rep.lie[i];
    expect("lie action of squaring", p.space.name(i), ga((*p.squaring)[i]), mul(gx, gx));
    for (std::size_t j : p.space.indices(0)) {
      const Matrix &px = rep.assoc[i], &py = rep.assoc[j], &gy = rep.lie[j];
      std::string w = pair_name(p, i, j);
      expect("odd-even compatibility on even part", w, restrict_to(mul(mul(py, gx), px), rep.space, 0),
             restrict_to(mul(mul(px, py), gx), rep.space, 0));
      Matrix rhs = sum(sum(mul(mul(py, gx), py), mul(mul(px, py), gy)), mul(mul(gy, px), py));
      expect("odd-even compatibility on odd part", w, restrict_to(mul(mul(py, py), gx), rep.space, 1),
             restrict_to(rhs, rep.space, 1));
    }
  }
  return r;
}

Representation adjoint_representation(const AlgebraBundle& p) {
  Representation rep{p, p.space, {}, {}};
  for (std::size_t i = 0; i < p.dim(); ++i) {
    rep.assoc.push_back(left_mult(p, p.basis(i)));
    rep.lie.push_back(ad(p, p.basis(i)));
  }
  return rep;
}

AlgebraBundle semidirect_poisson(const Representation& rep) {
  Report r = check_representation(rep);
  if (!r.ok()) throw Error(ErrorKind::InvalidRepresentation, r.summary());
  const AlgebraBundle& p = rep.algebra;
  const std::size_t n = p.dim(), m = rep.space.dim(), total = n + m;
  std::vector<BasisVector> basis = p.space.basis();
  for (auto b : rep.space.basis()) {
    while (p.space.index_of(b.name)) b.name += "'";
    basis.push_back(b);
  }
  AlgebraBundle out = make_bundle(p.field, basis, p.name.empty() ? std::string() : p.name + "+V");
  out.product = BilinearTable(total);
  out.bracket = BilinearTable(total);
  out.squaring = std::vector<Vec>(total, Vec(total, 0));
  auto embed = [&](const Vec& x, std::size_t offset) {
    Vec v(total, 0);
    std::copy(x.begin(), x.end(), v.begin() + static_cast<std::ptrdiff_t>(offset));
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.product->at(i, j) = embed(p.product->at(i, j), 0);
      out.bracket->at(i, j) = embed(p.bracket->at(i, j), 0);
    }
    for (std::size_t k = 0; k < m; ++k) {
      out.product->set(i, n + k, embed(rep.assoc[i].column(k), n));
      out.bracket->set(i, n + k, embed(rep.lie[i].column(k), n));
    }
    out.squaring->at(i) = embed((*p.squaring)[i], 0);
  }
  if (p.unit && rep.assoc.size() == n && operator_of(p.field, rep.assoc, *p.unit, m) == Matrix::identity(m))
    out.unit = embed(*p.unit, 0);
  return out;
}

AlgebraBundle tensor_product(const AlgebraBundle& p, const AlgebraBundle& q) {
  if (!p.is_poisson() || !q.is_poisson()) throw Error(ErrorKind::MissingStructure, "tensor factors must be Poisson");
  if (!(p.field == q.field)) throw Error(ErrorKind::DimensionMismatch, "tensor factors over different fields");
  const Field& f = p.field;
  const std::size_t np = p.dim(), nq = q.dim(), n = np * nq;
  std::vector<BasisVector> basis;
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < nq; ++j)
      basis.push_back({p.space.name(i) + "." + q.space.name(j), (p.space.parity(i) + q.space.parity(j)) & 1});
  AlgebraBundle out = make_bundle(f, basis, p.name + "*" + q.name);
  out.product = BilinearTable(n);
  out.bracket = BilinearTable(n);
  out.squaring = std::vector<Vec>(n, Vec(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t i = a / nq, j = a % nq;
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t k = b / nq, l = b % nq;
      out.product->at(a, b) = kron(f, p.product->at(i, k), q.product->at(j, l));
      Vec br = kron(f, p.bracket->at(i, k), q.product->at(j, l));
      add_into(br, kron(f, p.product->at(i, k), q.bracket->at(j, l)));
      out.bracket->at(a, b) = br;
    }
    if (p.space.parity(i) == 0 && q.space.parity(j) == 1)
      (*out.squaring)[a] = kron(f, p.product->at(i, i), (*q.squaring)[j]);
    else if (p.space.parity(i) == 1 && q.space.parity(j) == 0)
      (*out.squaring)[a] = kron(f, (*p.squaring)[i], q.product->at(j, j));
  }
  if (p.unit && q.unit) out.unit = kron(f, *p.unit, *q.unit);
  return out;
}

}  // namespace spo
