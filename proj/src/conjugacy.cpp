#include "invconj/conjugacy.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

namespace invconj {

namespace {

bool conjugates(const InverseSemigroup& s, int a, int b, int g) {
  const int gi = s.inv1(g);
  return s.prod1(s.prod1(gi, a), g) == b && s.prod1(s.prod1(g, b), gi) == a;
}

}  // namespace

Partition iconj_classes(const InverseSemigroup& s) {
  const int n = s.size();
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (labels[b] != b) continue;  // already joined to something smaller
      for (int g = 0; g < s.s1_size(); ++g) {
        if (conjugates(s, a, b, g)) {
          labels[b] = labels[a];
          break;
        }
      }
    }
  }
  return partition_from_labels(labels);
}

ConjugatorSet conjugator_set(const InverseSemigroup& s, int a, int b) {
  ConjugatorSet out;
  out.a = a;
  out.b = b;
  for (int g = 0; g < s.s1_size(); ++g)
    if (conjugates(s, a, b, g)) out.witnesses.push_back(g);
  return out;
}

Partition n_conjugacy_classes(const InverseSemigroup& s) {
  const int n = s.size();
  const int n1 = s.s1_size();
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  auto related = [&](int a, int b) {
    for (int g = 0; g < n1; ++g) {
      if (s.prod1(a, g) != s.prod1(g, b)) continue;
      const int ag = s.prod1(a, g);
      for (int h = 0; h < n1; ++h) {
        if (s.prod1(b, h) == s.prod1(h, a) && s.prod1(h, ag) == b &&
            s.prod1(s.prod1(g, b), h) == a)
          return true;
      }
    }
    return false;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (labels[b] == b && related(a, b)) labels[b] = labels[a];
  return partition_from_labels(labels);
}

std::optional<Counterexample> sapir_counterexample(const InverseSemigroup& s) {
  const int n = s.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int g = 0; g < s.s1_size(); ++g) {
        const int gi = s.inv1(g);
        const int ggi = s.prod1(g, gi);
        const int gig = s.prod1(gi, g);
        const bool c1 = s.prod1(s.prod1(gi, a), g) == b;
        const bool c2 = s.prod1(s.prod1(g, b), gi) == a;
        const bool c3 = s.prod1(a, g) == s.prod1(g, b);
        const bool c4 = s.prod1(b, gi) == s.prod1(gi, a);
        const bool c5 = s.prod1(a, ggi) == a;
        const bool c6 = s.prod1(ggi, a) == a;
        const bool c7 = s.prod1(b, gig) == b;
        const bool c8 = s.prod1(gig, b) == b;
        const std::array<bool, 5> sets = {
            c1 && c2,        // (a)
            c1 && c5 && c6,  // (b)
            c3 && c5 && c8,  // (c)
            c2 && c7 && c8,  // (d)
            c4 && c6 && c7,  // (e)
        };
        const bool any = sets[0];
        for (bool v : sets) {
          if (v != any)
            return Counterexample{"condition sets disagree", {a, b, g}};
        }
        if (any && !(c1 && c2 && c3 && c4 && c5 && c6 && c7 && c8))
          return Counterexample{"set holds but some equation fails", {a, b, g}};
      }
    }
  }
  return std::nullopt;
}

bool check_sapir_equivalence(const InverseSemigroup& s) {
  return !sapir_counterexample(s).has_value();
}

std::optional<Counterexample> upward_closure_counterexample(
    const InverseSemigroup& s) {
  const int n = s.size();
  const int n1 = s.s1_size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int g = 0; g < n1; ++g) {
        if (!conjugates(s, a, b, g)) continue;
        for (int h = 0; h < n1; ++h) {
          if (s.natural_leq1(g, h) && !conjugates(s, a, b, h))
            return Counterexample{"witness set not upward closed",
                                  {a, b, g, h}};
        }
      }
    }
  }
  return std::nullopt;
}

bool check_upward_closure(const InverseSemigroup& s) {
  return !upward_closure_counterexample(s).has_value();
}

std::optional<Counterexample> same_g_counterexample(const InverseSemigroup& s) {
  const int n = s.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int g = 0; g < s.s1_size(); ++g) {
        if (!conjugates(s, a, b, g)) continue;
        const int la = s.prod(s.inv(a), a), lb = s.prod(s.inv(b), b);
        const int ra = s.prod(a, s.inv(a)), rb = s.prod(b, s.inv(b));
        if (!conjugates(s, la, lb, g) || !conjugates(s, ra, rb, g))
          return Counterexample{"witness fails on the idempotent pair",
                                {a, b, g}};
      }
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> iconj_within_d_counterexample(
    const InverseSemigroup& s) {
  const Partition conj = iconj_classes(s);
  const GreenData green = s.green_relations();
  for (const auto& cls : conj.classes) {
    for (int x : cls) {
      if (green.d.class_of[x] != green.d.class_of[cls.front()])
        return Counterexample{"conjugate pair in distinct D-classes",
                              {cls.front(), x}};
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> inv_pair_conjugate_counterexample(
    const InverseSemigroup& s) {
  const Partition conj = iconj_classes(s);
  for (int x = 0; x < s.size(); ++x) {
    const int left = s.prod(x, s.inv(x));
    const int right = s.prod(s.inv(x), x);
    if (!conj.same(left, right))
      return Counterexample{"xx^-1 not conjugate to x^-1x", {x, left, right}};
  }
  return std::nullopt;
}

namespace {

// True when every class of `fine` lies inside one class of `coarse`.
bool refines(const Partition& fine, const Partition& coarse) {
  for (const auto& cls : fine.classes) {
    for (int x : cls)
      if (coarse.class_of[x] != coarse.class_of[cls.front()]) return false;
  }
  return true;
}

void require(bool ok, const std::string& theorem, const std::string& witness) {
  if (!ok)
    throw Error("EquivalenceViolated", theorem + " failed on " + witness);
}

}  // namespace

CharacterizeReport characterize(const InverseSemigroup& s) {
  const int n = s.size();
  const Partition conj = iconj_classes(s);
  const GreenData green = s.green_relations();

  CharacterizeReport r;
  r.is_clifford = true;
  for (int a = 0; a < n; ++a)
    r.is_clifford &= s.prod(a, s.inv(a)) == s.prod(s.inv(a), a);

  r.is_semilattice = true;
  for (int a = 0; a < n; ++a) r.is_semilattice &= s.idempotent(a);

  r.is_h_trivial = green.h.count() == n;

  r.is_commutative = true;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      r.is_commutative &= s.prod(a, b) == s.prod(b, a);

  r.is_group = static_cast<int>(s.idempotents().size()) == 1;
  r.conj_universal = conj.count() == 1;
  r.conj_identity = conj.count() == n;

  r.conj_meet_order_identity = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && conj.same(a, b) && s.natural_leq(a, b))
        r.conj_meet_order_identity = false;

  // Cross-validation of the characterization equivalences on this table.
  bool no_distinct_idem_conj = true;
  for (int e : s.idempotents())
    for (int f : s.idempotents())
      if (e != f && conj.same(e, f)) no_distinct_idem_conj = false;
  require(r.is_clifford == refines(conj, green.h), "clifford<=>conj-in-H",
          "table");
  require(r.is_clifford == refines(conj, green.r), "clifford<=>conj-in-R",
          "table");
  require(r.is_clifford == refines(conj, green.l), "clifford<=>conj-in-L",
          "table");
  require(r.is_clifford == no_distinct_idem_conj,
          "clifford<=>no-conjugate-idempotents", "table");
  require(r.is_semilattice == refines(green.l, conj), "semilattice<=>L-in-conj",
          "table");
  require(r.is_semilattice == refines(green.r, conj), "semilattice<=>R-in-conj",
          "table");
  require(r.is_h_trivial == refines(green.h, conj), "h-trivial<=>H-in-conj",
          "table");
  require(r.is_commutative == r.conj_identity, "commutative<=>conj-identity",
          "table");
  require(r.conj_universal == (n == 1), "universal<=>singleton", "table");
  require(r.conj_meet_order_identity, "finite-stability", "table");
  return r;
}

bool check_clifford_group_conjugacy(const InverseSemigroup& s) {
  const int n = s.size();
  bool clifford = true;
  for (int a = 0; a < n; ++a)
    clifford &= s.prod(a, s.inv(a)) == s.prod(s.inv(a), a);
  if (!clifford) throw Error("NotClifford", "table is not a Clifford semigroup");

  const Partition conj = iconj_classes(s);
  const GreenData green = s.green_relations();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!conj.same(a, b)) continue;
      if (green.h.class_of[a] != green.h.class_of[b]) return false;
      bool witness_in_h = false;
      for (int h = 0; h < n && !witness_in_h; ++h)
        witness_in_h = green.h.class_of[h] == green.h.class_of[a] &&
                       conjugates(s, a, b, h);
      if (!witness_in_h) return false;
    }
  }
  return true;
}

FactorizableReport check_factorizable_unit_conjugacy(
    const InverseSemigroup& s) {
  if (!s.is_monoid())
    throw Error("NotMonoid", "factorizability is defined for monoids only");
  const int n = s.size();
  const int one = s.identity1();

  std::vector<int> units;
  for (int g = 0; g < n; ++g)
    if (s.prod(g, s.inv(g)) == one && s.prod(s.inv(g), g) == one)
      units.push_back(g);

  FactorizableReport r;
  std::vector<bool> covered(n, false);
  for (int e : s.idempotents())
    for (int u : units) covered[s.prod(e, u)] = true;
  r.is_factorizable =
      std::all_of(covered.begin(), covered.end(), [](bool v) { return v; });

  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (labels[b] != b) continue;
      for (int u : units) {
        if (s.prod(s.prod(s.inv(u), a), u) == b &&
            s.prod(s.prod(u, b), s.inv(u)) == a) {
          labels[b] = labels[a];
          break;
        }
      }
    }
  }
  r.sim_u_equals_sim_i = partition_from_labels(labels) == iconj_classes(s);
  if (r.is_factorizable && !r.sim_u_equals_sim_i)
    throw Error("EquivalenceViolated",
                "factorizable monoid where unit conjugacy differs");
  return r;
}

}  // namespace invconj
