#include <doctest.h>

#include "superpoisson/checks.hpp"
#include "superpoisson/io.hpp"
#include "superpoisson/library.hpp"
#include "superpoisson/pre_poisson.hpp"

using namespace spo;

namespace {

TwoProductBundle even_plane() { return make_two_product(Field(1), SuperSpace({{"e1", 0}, {"e2", 0}}), "plane"); }

// Brute force over parity-preserving 0/1 matrices, with every odd element tried for the squaring law.
std::size_t rota_baxter_count_oracle(const AlgebraBundle& a) {
  const Field& f = a.field;
  const std::size_t n = a.dim();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.space.parity(i) == a.space.parity(j)) slots.emplace_back(i, j);
  std::vector<Vec> odd_elements;
  const auto odd = a.space.indices(1);
  for (std::size_t m = 1; m < (std::size_t{1} << odd.size()); ++m) {
    Vec v = a.zero();
    for (std::size_t k = 0; k < odd.size(); ++k)
      if (m >> k & 1) v[odd[k]] = 1;
    odd_elements.push_back(v);
  }
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    Matrix r(n, n);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) r(slots[s].first, slots[s].second) = 1;
    auto R = [&](const Vec& x) { return apply(f, r, x); };
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        Vec x = a.basis(i), y = a.basis(j);
        Vec p = eval_product(a, R(x), y);
        add_into(p, eval_product(a, x, R(y)));
        Vec b = eval_bracket(a, R(x), y);
        add_into(b, eval_bracket(a, x, R(y)));
        ok = eval_product(a, R(x), R(y)) == R(p) && eval_bracket(a, R(x), R(y)) == R(b);
      }
    for (const Vec& x : odd_elements)
      if (ok) ok = eval_squaring(a, R(x)) == R(eval_bracket(a, R(x), x));
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_SUITE("pre_poisson") {
  TEST_CASE("zero products") {
    TwoProductBundle b = even_plane();
    CHECK(check_zinbiel(b).ok());
    CHECK(check_left_symmetric(b).ok());
    CHECK(check_pre_poisson(b).ok());
    AlgebraBundle p = pre_poisson_to_poisson(b);
    CHECK(p.product->is_zero());
    CHECK(p.bracket->is_zero());
    CHECK(zinbiel_nilpotency_index(b) == std::size_t{2});
  }

  TEST_CASE("a two-dimensional Zinbiel algebra") {
    TwoProductBundle b = even_plane();
    b.star.at(0, 0) = b.basis(1);
    CHECK(check_zinbiel(b).ok());
    // e1*e1 + e1*e1 vanishes in characteristic two.
    CHECK(zinbiel_to_assoc(b).product->is_zero());
    CHECK(zinbiel_nilpotency_index(b) == std::size_t{3});
    CHECK(check_pre_poisson(b).ok());
  }

  TEST_CASE("perturbed products fail") {
    TwoProductBundle b = even_plane();
    b.star.at(0, 0) = b.basis(1);
    b.star.at(1, 0) = b.basis(0);
    CHECK_FALSE(check_zinbiel(b).ok());
    CHECK_FALSE(check_pre_poisson(b).ok());

    TwoProductBundle c = even_plane();
    c.triangle.at(0, 1) = c.basis(0);
    c.triangle.at(1, 0) = c.basis(1);
    c.triangle.at(1, 1) = c.basis(0);
    CHECK_FALSE(check_left_symmetric(c).ok());
  }

  TEST_CASE("associative triangles are left-symmetric") {
    AlgebraBundle m = matrix_superalgebra_1_1();
    TwoProductBundle b = make_two_product(m.field, m.space, "mat");
    b.triangle = *m.product;
    CHECK(check_left_symmetric(b).ok());
    AlgebraBundle g = lss_to_lie(b), ref = library_algebra("gl_1_1");
    CHECK(*g.bracket == *ref.bracket);
    CHECK(*g.squaring == *ref.squaring);
    CHECK(check_lie(g).ok());
  }

  TEST_CASE("the identity is not a Rota-Baxter operator") {
    AlgebraBundle a = library_algebra("example_2_2");
    Report r = check_rota_baxter(a, Matrix::identity(4), RotaBaxterVariant::Associative);
    CHECK(r.has_law("associative Rota-Baxter"));
    try {
      rota_baxter_to_pre_poisson(a, Matrix::identity(4));
      FAIL("expected NotRotaBaxter");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotRotaBaxter);
    }
  }

  TEST_CASE("odd operators are refused") {
    AlgebraBundle a = library_algebra("example_1_1");
    Matrix r(2, 2);
    r(0, 1) = 1;
    try {
      check_rota_baxter(a, r, RotaBaxterVariant::Lie);
      FAIL("expected NotEven");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotEven);
    }
  }

  TEST_CASE("Rota-Baxter search") {
    for (const char* name : {"k1", "example_1_1", "example_2_2", "odd_line", "pi_pi_0_1"}) {
      CAPTURE(name);
      AlgebraBundle a = library_algebra(name);
      auto found = rota_baxter_search(a);
      CHECK(found.size() == rota_baxter_count_oracle(a));
      for (const Matrix& r : found) {
        CHECK(check_rota_baxter(a, r, RotaBaxterVariant::Associative).ok());
        CHECK(check_rota_baxter(a, r, RotaBaxterVariant::Lie).ok());
        TwoProductBundle b = rota_baxter_to_pre_poisson(a, r);
        CHECK(check_pre_poisson(b).ok());
        CHECK(check_poisson(pre_poisson_to_poisson(b)).ok());
      }
    }
  }

  TEST_CASE("Rota-Baxter counts on the small examples") {
    CHECK(rota_baxter_search(library_algebra("example_1_1")).size() == 1);
    CHECK(rota_baxter_search(library_algebra("example_2_2")).size() == 2);
  }
}
