#include "test_main.hpp"

#include <algorithm>
#include <set>

#include "invconj/chart.hpp"

using namespace invconj;

namespace {

Chart random_chart(const GroundSet& g, std::mt19937_64& rng) {
  const int n = static_cast<int>(g.size());
  std::vector<int> img(n, -1);
  std::vector<int> targets(n);
  std::iota(targets.begin(), targets.end(), 0);
  std::shuffle(targets.begin(), targets.end(), rng);
  size_t next = 0;
  for (int i = 0; i < n; ++i)
    if (rng() % 2) img[i] = targets[next++];
  return Chart(g, std::move(img));
}

}  // namespace

TEST_CASE("parsing the worked example") {
  const GroundSet g = parse_ground("1..9");
  const Chart a = parse_chart("(2 6 8)[1 3][4 5 9]", g);
  CHECK(a.apply(g.size() - 8) >= 0);  // 2 is in the domain
  auto maps_to = [&](const std::string& x, const std::string& y) {
    int xi = -1, yi = -1;
    for (int i = 0; i < a.points(); ++i) {
      if (g[i] == x) xi = i;
      if (g[i] == y) yi = i;
    }
    return a.apply(xi) == yi;
  };
  CHECK(maps_to("2", "6"));
  CHECK(maps_to("6", "8"));
  CHECK(maps_to("8", "2"));
  CHECK(maps_to("1", "3"));
  CHECK(maps_to("4", "5"));
  CHECK(maps_to("5", "9"));
  CHECK(a.rank() == 6);
  CHECK(a.span().size() == 8);
  CHECK(to_string(a) == "(2 6 8)[1 3][4 5 9]");
}

TEST_CASE("the empty chart parses from 0 and from whitespace") {
  const GroundSet g = parse_ground("1..3");
  CHECK(parse_chart("0", g).empty());
  CHECK(parse_chart("", g).empty());
  CHECK(to_string(parse_chart("0", g)) == "0");
}

TEST_CASE("parse errors") {
  const GroundSet g = parse_ground("1..4");
  CHECK_THROWS_WITH_AS(parse_chart("(1 2)(2 3)", g),
                       doctest::Contains("DuplicatePoint"), Error);
  CHECK_THROWS_WITH_AS(parse_chart("[1]", g), doctest::Contains("ChainTooShort"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_chart("(1 5)", g), doctest::Contains("BadSyntax"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_chart("1 2", g), doctest::Contains("BadSyntax"),
                       Error);
}

TEST_CASE("composition runs left to right") {
  const GroundSet g = parse_ground("1..3");
  const Chart a = parse_chart("[1 2]", g);
  const Chart b = parse_chart("[2 3]", g);
  CHECK(to_string(compose(a, b)) == "[1 3]");

  // disjoint domain and image compose to the empty chart
  CHECK(compose(parse_chart("[1 2]", g), parse_chart("[1 3]", g)).empty());

  // a a^-1 is the identity on dom(a)
  const Chart aa = compose(a, inverse(a));
  CHECK(to_string(aa) == "(1)");
}

TEST_CASE("ground mismatch is refused") {
  const Chart a = parse_chart("[1 2]", parse_ground("1..3"));
  const Chart b = parse_chart("[1 2]", parse_ground("1..4"));
  CHECK_THROWS_AS(compose(a, b), Error);
  CHECK_THROWS_AS(conjugate_charts(a, b), Error);
}

TEST_CASE("decompose the worked example") {
  const GroundSet g = parse_ground("1..9");
  const Chart a = parse_chart("(2 6 8)[1 3][4 5 9]", g);
  const auto comps = decompose(a);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].kind == ComponentKind::Cycle);
  CHECK(comps[0].points.size() == 3);
  CHECK(comps[1].kind == ComponentKind::Chain);
  CHECK(comps[1].points.size() == 2);  // [1 3], length 1
  CHECK(comps[2].kind == ComponentKind::Chain);
  CHECK(comps[2].points.size() == 3);  // [4 5 9], length 2
}

TEST_CASE("identity decomposes into 1-cycles, empty chart into nothing") {
  const GroundSet g = parse_ground("1..2");
  CHECK(decompose(identity_chart(g)).size() == 2);
  CHECK(decompose(Chart(g)).empty());
  CHECK(cycle_chain_type(Chart(g)) == CycleChainType{});
}

TEST_CASE("cycle-chain types") {
  const GroundSet g9 = parse_ground("1..9");
  const CycleChainType t =
      cycle_chain_type(parse_chart("(2 6 8)[1 3][4 5 9]", g9));
  CHECK(t.cycle_counts == std::map<int, int>{{3, 1}});
  CHECK(t.chain_counts == std::map<int, int>{{1, 1}, {2, 1}});

  const GroundSet g3 = parse_ground("1..3");
  const CycleChainType p = cycle_chain_type(parse_chart("(1 2)(3)", g3));
  CHECK(p.cycle_counts == std::map<int, int>{{1, 1}, {2, 1}});
  CHECK(p.chain_counts.empty());
}

TEST_CASE("decompose then rejoin is the identity, exhaustively to 6 points") {
  for (int n = 1; n <= 6; ++n) {
    GroundSet g = parse_ground("1.." + std::to_string(n));
    for (const Chart& c : all_charts(g))
      CHECK(join_components(g, decompose(c)) == c);
  }
}

TEST_CASE("decompose then rejoin on random charts over 12 points") {
  const GroundSet g = parse_ground("1..12");
  auto rng = testsupport::make_rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const Chart c = random_chart(g, rng);
    CHECK(join_components(g, decompose(c)) == c);
  }
}

TEST_CASE("type arithmetic: sum k|cycles_k| + (k+1)|chains_k| = |span|") {
  const GroundSet g = parse_ground("1..4");
  for (const Chart& c : all_charts(g)) {
    const CycleChainType t = cycle_chain_type(c);
    int total = 0;
    for (const auto& [k, cnt] : t.cycle_counts) total += k * cnt;
    for (const auto& [k, cnt] : t.chain_counts) total += (k + 1) * cnt;
    CHECK(total == static_cast<int>(c.span().size()));
  }
}

TEST_CASE("conjugacy of charts is type equality") {
  const GroundSet g = parse_ground("1..4");
  CHECK(conjugate_charts(parse_chart("(1 2)[3 4]", g),
                         parse_chart("(3 4)[1 2]", g)));
  CHECK(!conjugate_charts(parse_chart("[1 2]", g), parse_chart("(1 2)", g)));
  const Chart a = parse_chart("(1 3)[2 4]", g);
  CHECK(conjugate_charts(a, a));
}

TEST_CASE("build_conjugator on reference pairs") {
  const GroundSet g = parse_ground("1..4");

  const Chart c = parse_chart("(1 2)", g);
  const auto self_tau = build_conjugator(c, c);
  REQUIRE(self_tau.has_value());
  CHECK(to_string(*self_tau) == "(1)(2)");  // identity pairing

  const Chart a = parse_chart("(1 2)[3 4]", g);
  const Chart b = parse_chart("(3 4)[1 2]", g);
  const auto tau = build_conjugator(a, b);
  REQUIRE(tau.has_value());
  CHECK(to_string(*tau) == "(1 3)(2 4)");  // 1->3, 2->4, 3->1, 4->2

  CHECK(!build_conjugator(parse_chart("[1 2]", g), parse_chart("(1 2)", g))
             .has_value());
}

TEST_CASE("build_conjugator output always verifies, over all I(3) pairs") {
  const GroundSet g = parse_ground("1..3");
  const auto charts = all_charts(g);
  for (const Chart& a : charts) {
    for (const Chart& b : charts) {
      const auto tau = build_conjugator(a, b);
      CHECK(tau.has_value() == conjugate_charts(a, b));
      if (tau) {
        CHECK(compose(compose(inverse(*tau), a), *tau) == b);
        CHECK(compose(compose(*tau, b), inverse(*tau)) == a);
        // dom tau = span a, im tau = span b
        CHECK(tau->domain() == a.span());
        CHECK(tau->image() == b.span());
      }
    }
  }
}

TEST_CASE("permutation conjugator extends off the span") {
  const GroundSet g5 = parse_ground("1..5");
  const Chart a = parse_chart("(1 2)[3 4]", g5);
  const Chart b = parse_chart("(3 4)[1 2]", g5);
  const auto sigma = build_permutation_conjugator(a, b);
  REQUIRE(sigma.has_value());
  CHECK(sigma->rank() == 5);
  CHECK(sigma->apply(4) == 4);  // the off-span point 5 is fixed
  CHECK(compose(compose(inverse(*sigma), a), *sigma) == b);

  const GroundSet g9 = parse_ground("1..9");
  const Chart alpha = parse_chart("(2 6 8)[1 3][4 5 9]", g9);
  const auto id = build_permutation_conjugator(alpha, alpha);
  REQUIRE(id.has_value());
  CHECK(*id == identity_chart(g9));

  CHECK(!build_permutation_conjugator(parse_chart("[1 2]", g5),
                                      parse_chart("(1 2)", g5))
             .has_value());
}

TEST_CASE("permutation criterion agrees with type equality over I(4)") {
  const GroundSet g = parse_ground("1..4");
  const auto charts = all_charts(g);
  std::vector<Chart> perms;
  for (const Chart& c : charts)
    if (c.rank() == 4) perms.push_back(c);
  REQUIRE(perms.size() == 24);
  for (const Chart& a : charts) {
    for (const Chart& b : charts) {
      bool by_perm = false;
      for (const Chart& sigma : perms) {
        if (compose(compose(inverse(sigma), a), sigma) == b) {
          by_perm = true;
          break;
        }
      }
      CHECK(by_perm == conjugate_charts(a, b));
    }
  }
}

TEST_CASE("ideal conjugacy on the worked pair over {1..9}") {
  const GroundSet g = parse_ground("1..9");
  const Chart a = parse_chart("(1 2)[3 4][5 6 7]", g);
  const Chart b = parse_chart("(5 9)[1 6][3 8 7]", g);
  CHECK(a.span().size() == 7);
  CHECK(!conjugate_in_ideal(a, b, 6));  // |span| = 7 >= 6
  CHECK(conjugate_in_ideal(a, b, 8));
  CHECK(conjugate_in_ideal(Chart(g), Chart(g), 1));
  CHECK_THROWS_AS(conjugate_in_ideal(a, b, 5), Error);  // rank 5 not < 5
}

TEST_CASE("brute force conjugators") {
  const GroundSet g1 = parse_ground("1..1");
  const Chart id1 = identity_chart(g1);
  const auto w = brute_force_conjugators(id1, id1);
  // witnesses: the identity (1) and the empty chart conjugates nothing here
  CHECK(std::count(w.begin(), w.end(), id1) == 1);

  const GroundSet g2 = parse_ground("1..2");
  CHECK(brute_force_conjugators(parse_chart("[1 2]", g2),
                                parse_chart("(1 2)", g2))
            .empty());

  const GroundSet g4 = parse_ground("1..4");
  const Chart a = parse_chart("(1 2)[3 4]", g4);
  const Chart b = parse_chart("(3 4)[1 2]", g4);
  const auto witnesses = brute_force_conjugators(a, b);
  CHECK(!witnesses.empty());
  const auto tau = build_conjugator(a, b);
  REQUIRE(tau.has_value());
  CHECK(std::count(witnesses.begin(), witnesses.end(), *tau) == 1);

  CHECK_THROWS_AS(brute_force_conjugators(Chart(parse_ground("1..7")),
                                          Chart(parse_ground("1..7"))),
                  Error);
}

TEST_CASE("oracle equivalence on all of I(3), and witness domains") {
  const GroundSet g = parse_ground("1..3");
  const auto charts = all_charts(g);
  REQUIRE(charts.size() == 34);
  for (const Chart& a : charts) {
    for (const Chart& b : charts) {
      const auto witnesses = brute_force_conjugators(a, b);
      CHECK(!witnesses.empty() == conjugate_charts(a, b));
      for (const Chart& tau : witnesses) {
        // span(a) is inside dom(tau)
        const auto dom = tau.domain();
        for (int p : a.span())
          CHECK(std::find(dom.begin(), dom.end(), p) != dom.end());
      }
    }
  }
}

TEST_CASE("ground parsing") {
  CHECK(parse_ground("1..3") == GroundSet{"1", "2", "3"});
  CHECK(parse_ground("a b c") == GroundSet{"a", "b", "c"});
  CHECK(parse_ground("10,2,1") == GroundSet{"1", "2", "10"});
  CHECK_THROWS_AS(parse_ground("3..1"), Error);
  CHECK_THROWS_AS(parse_ground("1 1"), Error);
  CHECK_THROWS_AS(parse_ground(""), Error);
}

TEST_CASE("charts work over symbolic point names") {
  const GroundSet g = parse_ground("w x y z");
  const Chart c = parse_chart("(x y)[w z]", g);
  CHECK(to_string(c) == "(x y)[w z]");
  CHECK(conjugate_charts(c, parse_chart("(w z)[x y]", g)));
  const auto tau = build_conjugator(c, parse_chart("(w z)[x y]", g));
  REQUIRE(tau.has_value());
  CHECK(compose(compose(inverse(*tau), c), *tau) ==
        parse_chart("(w z)[x y]", g));
}
