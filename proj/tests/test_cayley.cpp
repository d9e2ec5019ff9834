#include "test_main.hpp"

#include <algorithm>

#include "invconj/cayley.hpp"
#include "invconj/table_builders.hpp"

using namespace invconj;

TEST_CASE("two-element semilattice under min is a valid inverse table") {
  const CayleyTable t = chain_semilattice_table(2);
  CHECK(validate_inverse(t).valid);
}

TEST_CASE("I(2) built from charts validates, 7 elements") {
  const CayleyTable t = symmetric_inverse_table(2);
  CHECK(t.size() == 7);
  CHECK(validate_inverse(t).valid);
}

TEST_CASE("left-zero semigroup is regular but rejected for idempotents") {
  const ValidationReport r = validate_inverse(left_zero_table(2));
  CHECK(!r.valid);
  bool not_regular = false, idem_clash = false;
  for (const auto& v : r.violations) {
    not_regular |= v.kind == "NotRegular";
    idem_clash |= v.kind == "IdempotentsDontCommute";
  }
  CHECK(!not_regular);
  CHECK(idem_clash);
}

TEST_CASE("non-associative table is reported") {
  CayleyTable t;
  t.elements = {"x", "y"};
  t.table = {{1, 0}, {0, 0}};  // x*x=y: (xx)x = yx = x but x(xx) = xy = y... check
  const ValidationReport r = validate_inverse(t);
  bool non_assoc = false;
  for (const auto& v : r.violations) non_assoc |= v.kind == "NonAssociative";
  CHECK(non_assoc);
}

TEST_CASE("empty tables are rejected upstream") {
  CHECK_THROWS_AS(check_shape(CayleyTable{}), Error);
}

TEST_CASE("adjoin_identity leaves monoids alone") {
  const CayleyTable i2 = symmetric_inverse_table(2);
  const CayleyTable same = adjoin_identity(i2);
  CHECK(same.size() == i2.size());
  CHECK(!same.has_adjoined_identity);

  // A 2-chain's top already acts as the identity.
  const CayleyTable chain = chain_semilattice_table(2);
  CHECK(adjoin_identity(chain).size() == 2);
}

TEST_CASE("adjoin_identity extends identity-free semilattices") {
  const CayleyTable t = antichain_bottom_semilattice();
  CHECK(!identity_index(t).has_value());
  const CayleyTable m = adjoin_identity(t);
  CHECK(m.size() == 4);
  CHECK(m.has_adjoined_identity);
  CHECK(identity_index(m) == 3);
  CHECK(validate_inverse(m).valid);
}

TEST_CASE("unique inverses") {
  const CayleyTable t = symmetric_inverse_table(2);
  const auto s = InverseSemigroup::from_table(t);

  for (int e : s.idempotents()) CHECK(s.unique_inverse(e) == e);

  CHECK(s.unique_inverse(t.index_of("[1 2]")) == t.index_of("[2 1]"));

  const auto g = InverseSemigroup::from_table(cyclic_group_table(5));
  for (int x = 0; x < g.size(); ++x) {
    CHECK(g.prod(x, g.unique_inverse(x)) == 0);  // g0 is the identity
    CHECK(g.prod(g.unique_inverse(x), x) == 0);
  }
}

TEST_CASE("natural partial order") {
  const CayleyTable t = symmetric_inverse_table(2);
  const auto s = InverseSemigroup::from_table(t);

  for (int a = 0; a < s.size(); ++a) CHECK(s.natural_leq(a, a));

  const int zero = t.index_of("0");
  for (int b = 0; b < s.size(); ++b) CHECK(s.natural_leq(zero, b));

  const auto g = InverseSemigroup::from_table(cyclic_group_table(4));
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      CHECK(g.natural_leq(a, b) == (a == b));
}

TEST_CASE("all five formulations of the natural order agree") {
  CHECK(natural_leq_all_forms_agree(
      InverseSemigroup::from_table(symmetric_inverse_table(2))));
  CHECK(natural_leq_all_forms_agree(
      InverseSemigroup::from_table(brandt_b2())));
  CHECK(natural_leq_all_forms_agree(
      InverseSemigroup::from_table(chain_semilattice_table(3))));
}

TEST_CASE("green relations on a semilattice are trivial") {
  const auto s = InverseSemigroup::from_table(chain_semilattice_table(3));
  const GreenData g = s.green_relations();
  CHECK(g.l.count() == 3);
  CHECK(g.r.count() == 3);
  CHECK(g.h.count() == 3);
  CHECK(g.d.count() == 3);
  CHECK(g.j.count() == 3);
}

TEST_CASE("green relations on a group are universal") {
  const auto s = InverseSemigroup::from_table(symmetric_group_table(3));
  const GreenData g = s.green_relations();
  CHECK(g.l.count() == 1);
  CHECK(g.r.count() == 1);
  CHECK(g.h.count() == 1);
  CHECK(g.d.count() == 1);
  CHECK(g.j.count() == 1);
}

TEST_CASE("I(2) D-classes have sizes 1, 4, 2 grouped by rank") {
  const auto s = InverseSemigroup::from_table(symmetric_inverse_table(2));
  const GreenData g = s.green_relations();
  std::vector<size_t> sizes;
  for (const auto& cls : g.d.classes) sizes.push_back(cls.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 2, 4});
}

TEST_CASE("green structure invariants") {
  for (const CayleyTable& t :
       {symmetric_inverse_table(2), symmetric_inverse_table(3), brandt_b2(),
        direct_product(cyclic_group_table(4), chain_semilattice_table(2))}) {
    const auto s = InverseSemigroup::from_table(t);
    const GreenData g = s.green_relations();

    // H = L n R
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < s.size(); ++b)
        CHECK(g.h.same(a, b) == (g.l.same(a, b) && g.r.same(a, b)));

    // finite: D = J, and D = L o R = R o L
    CHECK(g.d == g.j);
    for (int a = 0; a < s.size(); ++a) {
      for (int b = 0; b < s.size(); ++b) {
        bool lr = false, rl = false;
        for (int c = 0; c < s.size(); ++c) {
          lr |= g.l.same(a, c) && g.r.same(c, b);
          rl |= g.r.same(a, c) && g.l.same(c, b);
        }
        CHECK(lr == g.d.same(a, b));
        CHECK(rl == g.d.same(a, b));
      }
    }

    // each L-class and R-class holds exactly one idempotent
    for (const auto& cls : g.l.classes)
      CHECK(std::count_if(cls.begin(), cls.end(),
                          [&](int x) { return s.idempotent(x); }) == 1);
    for (const auto& cls : g.r.classes)
      CHECK(std::count_if(cls.begin(), cls.end(),
                          [&](int x) { return s.idempotent(x); }) == 1);
  }
}

TEST_CASE("table size cap honors the configured bound") {
  CHECK_THROWS_AS(InverseSemigroup::from_table(symmetric_inverse_table(3), 10),
                  Error);
  CHECK_NOTHROW(InverseSemigroup::from_table(symmetric_inverse_table(3), 34));
}

TEST_CASE("S^1 view adjoins only when needed") {
  const auto b2 = InverseSemigroup::from_table(brandt_b2());
  CHECK(!b2.is_monoid());
  CHECK(b2.s1_size() == 6);
  CHECK(b2.identity1() == 5);
  CHECK(b2.name1(5) == "1");

  const auto i2 = InverseSemigroup::from_table(symmetric_inverse_table(2));
  CHECK(i2.is_monoid());
  CHECK(i2.s1_size() == 7);
}

TEST_CASE("e-unitary detection") {
  CHECK(is_e_unitary(InverseSemigroup::from_table(chain_semilattice_table(3))));
  CHECK(is_e_unitary(InverseSemigroup::from_table(symmetric_group_table(3))));
  // I(2) is not E-unitary: 0 * [1 2] = 0 is idempotent but [1 2] is not.
  CHECK(!is_e_unitary(InverseSemigroup::from_table(symmetric_inverse_table(2))));
}
