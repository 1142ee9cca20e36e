// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brute_cohomology.hpp"
#include "superpoisson/checks.hpp"
#include "superpoisson/cohomology.hpp"
#include "superpoisson/constructions.hpp"
#include "superpoisson/deformations.hpp"
#include "superpoisson/divided_powers.hpp"
#include "superpoisson/enveloping.hpp"
#include "superpoisson/library.hpp"
#include "superpoisson/lie_rinehart.hpp"
#include "superpoisson/pre_poisson.hpp"

using namespace spo;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << "[" << what << "] ";
    }
  }
};

std::size_t coord(const CochainSpace& s, const std::string& name) {
  for (std::size_t c = 0; c < s.dim(); ++c)
    if (s.coord_name(c) == name) return c;
  throw Error(ErrorKind::ValidationError, "no coordinate " + name);
}

bool in_span(const Field& f, std::size_t dim, const std::vector<Vec>& basis, const Vec& v) {
  SpanBasis b(f, dim);
  for (const Vec& x : basis) b.insert(x);
  return b.contains(v);
}

bool is_poisson_cocycle(const AlgebraBundle& p, std::size_t n, const Vec& c) {
  CochainSpace s(p, adjoint_module(p), n);
  return in_span(p.field, s.dim(), poisson_subspace(p, n, std::nullopt), c) &&
         is_zero(coboundary_matrix(s).apply(p.field, c));
}

bool is_poisson_coboundary(const AlgebraBundle& p, std::size_t n, const Vec& c) {
  CohomologyResult r = poisson_cohomology(p, n, std::nullopt);
  CochainSpace s(p, adjoint_module(p), n);
  return in_span(p.field, s.dim(), r.coboundaries, c);
}

std::vector<AlgebraBundle> poisson_library() {
  std::vector<AlgebraBundle> out;
  for (const auto& name : library_names()) {
    AlgebraBundle a = library_algebra(name);
    if (a.is_poisson()) out.push_back(a);
  }
  return out;
}

// Criterion 1: the (1|1) example.
void small_example(Outcome& o) {
  AlgebraBundle p = library_algebra("example_1_1");
  CohomologyResult h1 = poisson_cohomology(p, 1, std::nullopt), h2 = poisson_cohomology(p, 2, std::nullopt);
  CohomologyResult h2e = poisson_cohomology(p, 2, 0), h2o = poisson_cohomology(p, 2, 1);
  o.notes << "H1=" << h1.dim << " H2=" << h2.dim << " (even " << h2e.dim << ", odd " << h2o.dim << ") ";
  o.require(h1.dim == 2, "H1 = 2");
  o.require(h2.dim == 1, "H2 = 1");
  CochainSpace s2 = layer_space(p);
  Vec w(s2.dim(), 0);
  w[coord(s2, "omega(f)->e")] = 1;
  o.require(is_poisson_cocycle(p, 2, w), "(0, omega) cocycle");
  o.require(!is_poisson_coboundary(p, 2, w), "(0, omega) nontrivial");
}

// Criterion 2: the (2|2) example.
void large_example(Outcome& o) {
  AlgebraBundle p = library_algebra("example_2_2");
  CohomologyResult h1 = poisson_cohomology(p, 1, std::nullopt), h2 = poisson_cohomology(p, 2, std::nullopt);
  o.notes << "H1=" << h1.dim << " H2=" << h2.dim << " ";
  o.require(h1.dim == 6, "H1 = 6");
  o.require(h2.dim == 7, "H2 = 7");
  CochainSpace s1(p, adjoint_module(p), 1);
  std::size_t cocycles = 0;
  for (const char* name : {"phi(e3)->e2", "phi(e4)->e2", "phi(e3)->e3", "phi(e4)->e3", "phi(e3)->e4", "phi(e4)->e4"}) {
    Vec v(s1.dim(), 0);
    v[coord(s1, name)] = 1;
    if (is_poisson_cocycle(p, 1, v)) ++cocycles;
    else o.notes << name << " not a Poisson cocycle; ";
  }
  o.require(cocycles == 6, "listed generators are cocycles");
}

// Criterion 3: axiom checks on the four named algebras.
void axiom_suite(Outcome& o) {
  Field f;
  std::vector<AlgebraBundle> algebras{library_algebra("example_1_1"), library_algebra("example_2_2"),
                                      build_pi_pi(f, make_dp_spec(DPType::PiPi, 1, 2, {1, 1})),
                                      build_pi_i(f, make_dp_spec(DPType::PiI, 1, 2, {1, 1}))};
  for (const AlgebraBundle& a : algebras) {
    Report r = check_poisson(a);
    o.notes << a.name << ":" << (r.ok() ? "ok" : r.violations().front().law) << " ";
    o.require(r.ok(), a.name);
  }
}

// Criterion 4: d o d = 0 for n <= 3, and the Poisson subcomplex is closed.
void complex_property(Outcome& o) {
  for (const auto& name : library_names()) {
    AlgebraBundle a = library_algebra(name);
    Module m = adjoint_module(a);
    for (std::size_t n = 0; n <= 3; ++n) {
      CochainSpace s0(a, m, n), s1(a, m, n + 1), s2(a, m, n + 2);
      SparseMatrix d0 = coboundary(s0, s1), d1 = coboundary(s1, s2);
      o.require(multiply(a.field, d1.to_dense(), d0.to_dense()).is_zero(), name + " Lie n=" + std::to_string(n));
      if (!a.is_poisson()) continue;
      SparseMatrix cons = poisson_constraints(s1);
      bool ok = true;
      for (const Vec& c : poisson_subspace(a, n, std::nullopt)) {
        Vec dc = d0.apply(a.field, c);
        ok = ok && is_zero(cons.apply(a.field, dc)) && is_zero(d1.apply(a.field, dc));
      }
      o.require(ok, name + " Poisson n=" + std::to_string(n));
    }
  }
}

// Criterion 5: exhaustive enumeration on every algebra of dimension <= 4 we can name.
void brute_force(Outcome& o) {
  std::vector<AlgebraBundle> algebras;
  for (const auto& name : library_names()) algebras.push_back(library_algebra(name));
  for (const char* name : {"k1", "example_1_1", "odd_line"})
    algebras.push_back(semidirect_poisson(adjoint_representation(library_algebra(name))));
  const std::pair<const char*, const char*> pairs[] = {
      {"k1", "example_2_2"}, {"example_1_1", "odd_line"}, {"example_1_1", "example_1_1"}, {"odd_line", "odd_line"}};
  for (auto [x, y] : pairs) algebras.push_back(tensor_product(library_algebra(x), library_algebra(y)));
  std::size_t groups = 0;
  for (const AlgebraBundle& a : algebras) {
    if (a.dim() > 4) continue;
    brute::Enumerator e(brute::from_bundle(a));
    for (int n = 0; n <= 2; ++n)
      for (int par = 0; par < 2; ++par) {
        const std::string w = a.name + " n=" + std::to_string(n) + " p=" + std::to_string(par);
        o.require(lie_cohomology(a, adjoint_module(a), n, par).dim == e.cohomology(n, par, false).cohomology(), w + " Lie");
        ++groups;
        if (!a.is_poisson()) continue;
        o.require(poisson_cohomology(a, n, par).dim == e.cohomology(n, par, true).cohomology(), w + " Poisson");
        ++groups;
      }
  }
  o.notes << algebras.size() << " algebras, " << groups << " groups ";
}

// Criterion 6: tensor products and semidirect products.
void constructions(Outcome& o) {
  auto lib = poisson_library();
  for (const AlgebraBundle& p : lib) {
    o.require(check_poisson(semidirect_poisson(adjoint_representation(p))).ok(), "semidirect " + p.name);
    for (const AlgebraBundle& q : lib) o.require(check_poisson(tensor_product(p, q)).ok(), p.name + " x " + q.name);
  }
}

// Criterion 7: Kaehler differentials and the universal derivation.
void kaehler_criterion(Outcome& o) {
  for (const char* name : {"example_1_1", "example_2_2"}) {
    AlgebraBundle p = library_algebra(name);
    const std::size_t n = p.dim();
    Kaehler k = kaehler(p);
    o.notes << name << " Omega=" << k.triple.lie.dim() << " ";
    o.require(k.well_defined.ok(), std::string(name) + " well defined");
    o.require(check_lie_rinehart(k.triple).ok(), std::string(name) + " Lie-Rinehart");
    for (const Matrix& der : derivation_space(p, Variant::Associative, 0)) {
      Matrix hat = kaehler_factor(k, der);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
          Vec g = unit_vector(n * n, kaehler_generator(n, j, i));
          if (apply(p.field, hat, kaehler_project(k, g)) != eval_product(p, p.basis(j), apply(p.field, der, p.basis(i))))
            o.require(false, std::string(name) + " factorization");
        }
    }
  }
}

// Criterion 8: enveloping algebras.
void enveloping(Outcome& o) {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<BasisVector> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back({"x" + std::to_string(i + 1), 0});
    AlgebraBundle l = make_bundle(Field(1), basis, "abelian");
    l.bracket = BilinearTable(n);
    l.squaring = std::vector<Vec>(n, l.zero());
    LieRinehartTriple t{library_algebra("k1"), l, {std::vector<Vec>{}}, {}};
    for (std::size_t x = 0; x < n; ++x) {
      t.action[0].push_back(l.basis(x));
      t.anchor.emplace_back(1, 1);
    }
    UEAResult r = truncated_uea(t, 4);
    auto dims = r.uea.degree_dims();
    std::size_t binom = 1;
    for (std::size_t d = 0; d <= 4; ++d) {
      if (d > 0) binom = binom * (n + d - 1) / d;
      o.require(dims[d] == binom, "abelian n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  }
  for (const char* name : {"example_1_1", "example_2_2"}) {
    PoissonUEA u = poisson_uea(library_algebra(name), 3);
    o.require(check_uea_relations(u.result.uea).ok(), std::string(name) + " relations");
    o.require(u.relations.ok(), std::string(name) + " Poisson relations");
    o.require(u.result.certificate.stable && u.result.certificate.dims == u.result.certificate.dims_next,
              std::string(name) + " certificate");
    o.notes << name << " dims";
    for (std::size_t d : u.result.certificate.dims) o.notes << " " << d;
    o.notes << " (slack " << u.result.certificate.slack << ") ";
  }
}

// Criterion 9: the (1|1) deformation.
void deformation(Outcome& o) {
  AlgebraBundle p = library_algebra("example_1_1");
  CochainSpace s2 = layer_space(p);
  Vec w(s2.dim(), 0);
  w[coord(s2, "omega(f)->e")] = 1;
  TruncatedDeformation d{p, {w}};
  o.require(check_infinitesimal(d).ok(), "infinitesimal");
  o.require(is_zero(obstruction(d)), "zero obstruction");
  TruncatedDeformation d2{p, {w, Vec(w.size(), 0)}};
  o.require(check_poisson(deformed_bundle(d2)).ok(), "order two");
  o.require(!equivalent_order1(p, w, Vec(w.size(), 0)).has_value(), "inequivalent to trivial");
}

// Criterion 10: pre-Poisson structures from Rota-Baxter operators.
void pre_poisson(Outcome& o) {
  for (const char* name : {"example_1_1", "example_2_2"}) {
    AlgebraBundle p = library_algebra(name);
    auto ops = rota_baxter_search(p);
    o.notes << name << ": " << ops.size() << " operators ";
    for (const Matrix& r : ops) {
      TwoProductBundle b = rota_baxter_to_pre_poisson(p, r);
      o.require(check_zinbiel(b).ok(), std::string(name) + " Zinbiel");
      o.require(check_left_symmetric(b).ok(), std::string(name) + " left-symmetric");
      o.require(check_pre_poisson(b).ok(), std::string(name) + " pre-Poisson");
      o.require(check_poisson(pre_poisson_to_poisson(b)).ok(), std::string(name) + " Poisson");
    }
  }
}

// Carry-less multiply and reduce, written out independently of the field class.
unsigned reference_mul(unsigned a, unsigned b, unsigned modulus, int k) {
  unsigned r = 0;
  for (int i = 0; i < k; ++i)
    if (b >> i & 1) r ^= a << i;
  for (int i = 2 * k - 2; i >= k; --i)
    if (r >> i & 1) r ^= modulus << (i - k);
  return r;
}

// Rank by counting the row space: |span| = q^rank.
std::size_t span_rank(const Field& f, const std::vector<Vec>& rows) {
  std::vector<Vec> span{Vec(rows.empty() ? 0 : rows[0].size(), 0)};
  for (const Vec& r : rows) {
    std::vector<Vec> next;
    for (const Vec& s : span)
      for (unsigned c = 0; c < f.order(); ++c) {
        Vec v = s;
        axpy(f, v, static_cast<Scalar>(c), r);
        next.push_back(v);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    span = std::move(next);
  }
  std::size_t rank = 0;
  for (std::size_t size = 1; size < span.size(); size *= f.order()) ++rank;
  return rank;
}

// Criterion 11: fields and ranks.
void field_linalg(Outcome& o) {
  for (int k = 1; k <= 3; ++k) {
    Field f(k);
    const unsigned q = f.order();
    bool ok = true;
    for (unsigned a = 0; a < q; ++a) {
      ok = ok && f.mul(a, 1) == a && f.add(a, 0) == a && f.add(a, a) == 0;
      if (a) ok = ok && f.mul(a, f.inv(a)) == 1;
      Scalar frob = a;
      for (int i = 0; i < k; ++i) frob = f.square(frob);
      ok = ok && frob == a;
      for (unsigned b = 0; b < q; ++b) {
        ok = ok && f.mul(a, b) == reference_mul(a, b, f.modulus(), k) && f.mul(a, b) == f.mul(b, a);
        ok = ok && f.square(a ^ b) == (f.square(a) ^ f.square(b)) && f.square(f.mul(a, b)) == f.mul(f.square(a), f.square(b));
        for (unsigned c = 0; c < q; ++c)
          ok = ok && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)) && f.mul(a, b ^ c) == (f.mul(a, b) ^ f.mul(a, c));
      }
    }
    std::vector<bool> hit(q, false);
    for (unsigned a = 0; a < q; ++a) hit[f.square(a)] = true;
    for (bool h : hit) ok = ok && h;
    o.require(ok, "GF(" + std::to_string(q) + ") axioms");
  }
  std::mt19937_64 rng(11);
  std::size_t agree = 0;
  for (int t = 0; t < 200; ++t) {
    Field f(1 + t % 3);
    const std::size_t rows = 1 + rng() % (f.order() == 8 ? 4 : 6), cols = 1 + rng() % 8;
    std::vector<Vec> rs;
    for (std::size_t i = 0; i < rows; ++i) {
      Vec v(cols);
      for (auto& c : v) c = static_cast<Scalar>(rng() % f.order());
      // Occasionally repeat a combination to force dependence.
      if (i >= 2 && rng() % 3 == 0) {
        v = rs[0];
        axpy(f, v, static_cast<Scalar>(1 + rng() % (f.order() - 1)), rs[1]);
      }
      rs.push_back(v);
    }
    if (rank(f, Matrix::from_rows(cols, rs)) == span_rank(f, rs)) ++agree;
  }
  o.notes << agree << "/200 ranks agree ";
  o.require(agree == 200, "rank oracle");
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<void(Outcome&)> run;
    double limit_s;
  };
  const std::vector<Criterion> criteria{
      {"(1|1) example cohomology", small_example, 1.0},
      {"(2|2) example cohomology", large_example, 5.0},
      {"axiom suite", axiom_suite, 10.0},
      {"d squares to zero", complex_property, 0},
      {"exhaustive cohomology oracle", brute_force, 0},
      {"constructions", constructions, 0},
      {"Kaehler differentials", kaehler_criterion, 0},
      {"enveloping algebras", enveloping, 0},
      {"(1|1) deformation", deformation, 0},
      {"pre-Poisson from Rota-Baxter", pre_poisson, 0},
      {"fields and ranks", field_linalg, 0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].limit_s > 0 && secs >= criteria[i].limit_s) o.require(false, "time limit");
    if (!o.pass) ++failed;
    std::printf("%s %2zu %-30s %7.3fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].title, secs, o.notes.str().c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
