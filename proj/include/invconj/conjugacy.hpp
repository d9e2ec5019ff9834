#ifndef INVCONJ_CONJUGACY_HPP_
#define INVCONJ_CONJUGACY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "invconj/cayley.hpp"

namespace invconj {

// Witnesses g in S^1 with g^-1 a g = b and g b g^-1 = a. Indices refer to
// the S^1 view of the semigroup they were computed from.
struct ConjugatorSet {
  int a = 0;
  int b = 0;
  std::vector<int> witnesses;

  bool empty() const { return witnesses.empty(); }
};

// Classes of the conjugacy a ~ b iff some g in S^1 has g^-1 a g = b and
// g b g^-1 = a, computed by scanning all g.
Partition iconj_classes(const InverseSemigroup& s);

ConjugatorSet conjugator_set(const InverseSemigroup& s, int a, int b);

// Classes of the four-equation conjugacy: exists g,h in S^1 with ag = gb,
// bh = ha, hag = b and gbh = a. Agrees with iconj_classes on inverse tables.
Partition n_conjugacy_classes(const InverseSemigroup& s);

struct Counterexample {
  std::string what;
  std::vector<int> elements;
};

// Each scan returns nullopt when the property holds on the whole table.

// Condition sets {i,ii}, {i,v,vi}, {iii,v,viii}, {ii,vii,viii}, {iv,vi,vii}
// agree for every triple (a,b,g), and a holding set implies all eight
// equations.
std::optional<Counterexample> sapir_counterexample(const InverseSemigroup& s);
bool check_sapir_equivalence(const InverseSemigroup& s);

// Conjugator sets are upward closed under the natural partial order on S^1.
std::optional<Counterexample> upward_closure_counterexample(
    const InverseSemigroup& s);
bool check_upward_closure(const InverseSemigroup& s);

// Any g conjugating a to b also conjugates a^-1 a to b^-1 b and
// a a^-1 to b b^-1.
std::optional<Counterexample> same_g_counterexample(const InverseSemigroup& s);

// Every conjugacy class lies inside a single D-class.
std::optional<Counterexample> iconj_within_d_counterexample(
    const InverseSemigroup& s);

// x x^-1 is conjugate to x^-1 x for every x.
std::optional<Counterexample> inv_pair_conjugate_counterexample(
    const InverseSemigroup& s);

struct CharacterizeReport {
  bool is_clifford = false;
  bool is_semilattice = false;
  bool is_h_trivial = false;
  bool is_commutative = false;
  bool is_group = false;
  bool conj_universal = false;
  bool conj_identity = false;
  bool conj_meet_order_identity = false;
};

// Computes the report and cross-validates every equivalence it encodes
// (Clifford five ways, semilattice, H-trivial, commutative, singleton,
// conjugacy-meets-order). Throws EquivalenceViolated on any mismatch, which
// signals an implementation bug, never a property of the input.
CharacterizeReport characterize(const InverseSemigroup& s);

// On a Clifford table: conjugate pairs are H-related and admit a witness
// inside their common H-class. Throws NotClifford otherwise.
bool check_clifford_group_conjugacy(const InverseSemigroup& s);

struct FactorizableReport {
  bool is_factorizable = false;
  bool sim_u_equals_sim_i = false;
};

// Monoids only (throws NotMonoid). Factorizable means S = E(S) U(S); in that
// case conjugacy by units coincides with the full conjugacy, which the
// function asserts.
FactorizableReport check_factorizable_unit_conjugacy(const InverseSemigroup& s);

}  // namespace invconj

#endif  // INVCONJ_CONJUGACY_HPP_
