#pragma once

#include <cstdint>
#include <vector>

#include "superpoisson/bundle.hpp"

namespace spo {

// (A, L, rho): A supercommutative and unital, L a Lie superalgebra and an A-module,
// rho the anchor.
struct LieRinehartTriple {
  AlgebraBundle algebra;                 // A
  AlgebraBundle lie;                     // L
  std::vector<std::vector<Vec>> action;  // action[a][x] = e_a . x_x, an element of L
  std::vector<Matrix> anchor;            // anchor[x] acts on A
};

// Element-level helpers.
Vec lr_act(const LieRinehartTriple& t, const Vec& a, const Vec& x);
Matrix lr_anchor(const LieRinehartTriple& t, const Vec& x);

Report check_lie_rinehart(const LieRinehartTriple& t, std::uint64_t seed = 1);
// (A, Der(A), id).
LieRinehartTriple der_triple(const AlgebraBundle& a);
// The Lie superalgebra on A + L.
AlgebraBundle lr_to_lie(const LieRinehartTriple& t);

// V with an A-action and an L-action pi.
struct LRModule {
  LieRinehartTriple triple;
  SuperSpace space;
  std::vector<Matrix> algebra_action;  // per basis element of A
  std::vector<Matrix> pi;              // per basis element of L
};

// Weak-module laws; A-linearity of pi is reported under the law "strong".
Report check_lr_module(const LRModule& m);
bool is_strong(const LRModule& m);
// (A, L + V, rho). Throws NotStrong for a module that is only weak.
LieRinehartTriple lr_module_semidirect(const LRModule& m);

// Module of Kaehler differentials with its Lie-Rinehart structure over P.
struct Kaehler {
  LieRinehartTriple triple;
  std::size_t generator_dim = 0;               // dim P squared: x dy with x, y basis vectors
  std::vector<Vec> relations;                  // reduced basis of the relation submodule
  std::vector<std::size_t> representatives;    // generator coordinates kept as the basis of Omega
  Report well_defined;                         // representative-independence of the structure maps
};

// Generator coordinate of e_j d e_i.
inline std::size_t kaehler_generator(std::size_t n, std::size_t j, std::size_t i) { return j * n + i; }
Kaehler kaehler(const AlgebraBundle& p);
// Coordinates in Omega of an element given on the generators.
Vec kaehler_project(const Kaehler& k, const Vec& generators);
// The P-linear map Omega -> P with x dy -> x D(y). Throws NotASubspace unless
// D kills every relation.
Matrix kaehler_factor(const Kaehler& k, const Matrix& derivation);

}  // namespace spo
