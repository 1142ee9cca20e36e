#include "superpoisson/library.hpp"

#include "superpoisson/checks.hpp"
#include "superpoisson/divided_powers.hpp"

namespace spo {
namespace {

AlgebraBundle empty_poisson(const Field& f, std::vector<BasisVector> basis, std::string name) {
  AlgebraBundle a = make_bundle(f, std::move(basis), std::move(name));
  const std::size_t n = a.dim();
  a.product = BilinearTable(n);
  a.bracket = BilinearTable(n);
  a.squaring = std::vector<Vec>(n, a.zero());
  return a;
}

// The unit acts as identity on every basis vector.
void set_unit(AlgebraBundle& a, std::size_t u) {
  for (std::size_t i = 0; i < a.dim(); ++i) a.product->set(u, i, a.basis(i));
  a.unit = a.basis(u);
}

AlgebraBundle one_dim(const Field& f) {
  AlgebraBundle a = empty_poisson(f, {{"1", 0}}, "k1");
  set_unit(a, 0);
  return a;
}

AlgebraBundle example_1_1(const Field& f) {
  AlgebraBundle a = empty_poisson(f, {{"e", 0}, {"f", 1}}, "example_1_1");
  set_unit(a, 0);
  (*a.squaring)[1] = a.basis(0);
  return a;
}

AlgebraBundle example_2_2(const Field& f) {
  AlgebraBundle a = empty_poisson(f, {{"e1", 0}, {"e2", 0}, {"e3", 1}, {"e4", 1}}, "example_2_2");
  set_unit(a, 0);
  a.product->set(2, 3, a.basis(1));
  (*a.squaring)[2] = a.basis(0);
  (*a.squaring)[3] = a.basis(1);
  return a;
}

AlgebraBundle odd_line(const Field& f) {
  AlgebraBundle a = empty_poisson(f, {{"1", 0}, {"theta", 1}}, "odd_line");
  set_unit(a, 0);
  return a;
}

}  // namespace

AlgebraBundle matrix_superalgebra_1_1(const Field& f) {
  // E11, E22 even; E12, E21 odd. E_ij E_kl = delta_jk E_il.
  const int rows[4] = {0, 1, 0, 1}, cols[4] = {0, 1, 1, 0};
  AlgebraBundle a = make_bundle(f, {{"E11", 0}, {"E22", 0}, {"E12", 1}, {"E21", 1}}, "mat_1_1");
  a.product = BilinearTable(4, Symmetry::None);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (cols[i] != rows[j]) continue;
      for (std::size_t k = 0; k < 4; ++k)
        if (rows[k] == rows[i] && cols[k] == cols[j]) a.product->at(i, j) = a.basis(k);
    }
  Vec unit = a.basis(0);
  unit[1] = 1;
  a.unit = unit;
  return a;
}

std::vector<std::string> library_names() {
  return {"k1", "example_1_1", "example_2_2", "odd_line", "pi_pi_0_1", "gl_1_1"};
}

AlgebraBundle library_algebra(const std::string& name, const Field& f) {
  if (name == "k1") return one_dim(f);
  if (name == "example_1_1") return example_1_1(f);
  if (name == "example_2_2") return example_2_2(f);
  if (name == "odd_line") return odd_line(f);
  if (name == "pi_pi_0_1") {
    AlgebraBundle a = build_pi_pi(f, make_dp_spec(DPType::PiPi, 0, 2, {}));
    a.name = name;
    return a;
  }
  if (name == "gl_1_1") {
    AlgebraBundle a = assoc_to_lie(matrix_superalgebra_1_1(f));
    a.name = name;
    return a;
  }
  throw Error(ErrorKind::ValidationError, "unknown example '" + name + "'");
}

}  // namespace spo
