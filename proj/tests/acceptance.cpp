// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion also enforces its wall-clock budget.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "invconj/bicyclic.hpp"
#include "invconj/cayley.hpp"
#include "invconj/chart.hpp"
#include "invconj/conjugacy.hpp"
#include "invconj/free_inverse.hpp"
#include "invconj/mcalister.hpp"
#include "invconj/partitions.hpp"
#include "invconj/table_builders.hpp"

#ifndef INVCONJ_CLI_PATH
#define INVCONJ_CLI_PATH "invconj"
#endif

using namespace invconj;

namespace {

int g_failures = 0;

void criterion(int id, const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (ok && elapsed > budget_seconds) {
    ok = false;
    detail = "over budget";
  }
  if (!ok) ++g_failures;
  std::printf("%s criterion %2d: %s (%.2fs%s%s)\n", ok ? "PASS" : "FAIL", id,
              name.c_str(), elapsed, detail.empty() ? "" : "; ",
              detail.c_str());
  std::fflush(stdout);
}

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string(INVCONJ_CLI_PATH) + " " + args + " 2>&1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 512> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int rc = pclose(pipe);
  status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return out;
}

bool charts_oracle_equivalence(int n, std::string& detail) {
  const GroundSet g = parse_ground("1.." + std::to_string(n));
  const auto charts = all_charts(g);
  for (const Chart& a : charts) {
    for (const Chart& b : charts) {
      const bool by_type = conjugate_charts(a, b);
      const bool by_oracle = !brute_force_conjugators(a, b).empty();
      if (by_type != by_oracle) {
        detail = "mismatch on " + to_string(a) + " vs " + to_string(b);
        return false;
      }
    }
  }
  return true;
}

Word random_word(std::mt19937_64& rng) {
  const int len = 1 + static_cast<int>(rng() % 20);
  Word w;
  for (int i = 0; i < len; ++i)
    w.push_back(Letter{static_cast<std::int8_t>(rng() % 3),
                       static_cast<bool>(rng() % 2)});
  return w;
}

Word random_rewrite(const Word& w, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    const int kind = static_cast<int>(rng() % 3);
    if (kind == 0) {
      const size_t i = rng() % w.size();
      Word out(w.begin(), w.begin() + i);
      out.push_back(w[i]);
      out.push_back(w[i].inverse());
      out.push_back(w[i]);
      out.insert(out.end(), w.begin() + i + 1, w.end());
      return out;
    }
    if (kind == 1 && w.size() >= 3) {
      for (size_t i = 0; i + 2 < w.size(); ++i) {
        if (w[i + 1] == w[i].inverse() && w[i + 2] == w[i]) {
          Word out(w.begin(), w.begin() + i);
          out.push_back(w[i]);
          out.insert(out.end(), w.begin() + i + 3, w.end());
          return out;
        }
      }
    }
    if (kind == 2 && w.size() >= 4) {
      for (size_t i = 0; i + 3 < w.size(); ++i) {
        if (w[i + 1] == w[i].inverse() && w[i + 3] == w[i + 2].inverse()) {
          Word out = w;
          std::swap(out[i], out[i + 2]);
          std::swap(out[i + 1], out[i + 3]);
          return out;
        }
      }
    }
  }
  return w;
}

McAlisterTriple trivial_2chain() {
  McAlisterTriple t;
  t.group = cyclic_group_table(1);
  t.poset.elements = {"bot", "top"};
  t.poset.leq = {{true, true}, {false, true}};
  t.ideal = {0, 1};
  t.action = {{0, 1}};
  return t;
}

McAlisterTriple z2_three_point() {
  McAlisterTriple t;
  t.group = cyclic_group_table(2);
  t.poset.elements = {"bot", "p", "q"};
  t.poset.leq = {{true, true, true}, {false, true, false}, {false, false, true}};
  t.ideal = {0, 1, 2};
  t.action = {{0, 1, 2}, {0, 2, 1}};
  return t;
}

}  // namespace

int main() {
  criterion(1, "class counting through the CLI", 1.0, [](std::string& detail) {
    const std::array<const char*, 6> expected = {"1", "2", "5", "10", "20", "36"};
    for (int n = 0; n <= 5; ++n) {
      int status = 0;
      const std::string out =
          run_cli("count-classes " + std::to_string(n), status);
      if (status != 0 || out != std::string(expected[n]) + "\n") {
        detail = "count-classes " + std::to_string(n) + " gave '" + out + "'";
        return false;
      }
    }
    return true;
  });

  criterion(2, "chart conjugacy matches the brute-force oracle on I(3), I(4)",
            60.0, [](std::string& detail) {
              return charts_oracle_equivalence(3, detail) &&
                     charts_oracle_equivalence(4, detail);
            });

  criterion(3, "type equality matches permutation conjugacy on I(3)", 10.0,
            [](std::string& detail) {
              const GroundSet g = parse_ground("1..3");
              const auto charts = all_charts(g);
              std::vector<Chart> perms;
              for (const Chart& c : charts)
                if (c.rank() == 3) perms.push_back(c);
              if (perms.size() != 6) {
                detail = "Sym(3) enumeration broken";
                return false;
              }
              for (const Chart& a : charts) {
                for (const Chart& b : charts) {
                  bool by_perm = false;
                  for (const Chart& sigma : perms) {
                    if (compose(compose(inverse(sigma), a), sigma) == b) {
                      by_perm = true;
                      break;
                    }
                  }
                  if (by_perm != conjugate_charts(a, b)) {
                    detail = to_string(a) + " vs " + to_string(b);
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(4, "ideal criterion on the worked pair over {1..9}", 10.0,
            [](std::string& detail) {
              const GroundSet g = parse_ground("1..9");
              const Chart a = parse_chart("(1 2)[3 4][5 6 7]", g);
              const Chart b = parse_chart("(5 9)[1 6][3 8 7]", g);
              if (conjugate_in_ideal(a, b, 6)) {
                detail = "conjugate in J_6 but |span| = 7";
                return false;
              }
              if (!conjugate_in_ideal(a, b, 8)) {
                detail = "not conjugate in J_8";
                return false;
              }
              return true;
            });

  criterion(5, "conjugacy class of the sample word (aBbAcC)C(aBbA)", 1.0, [](std::string& detail) {
    const Alphabet abc = Alphabet::of("abc");
    const auto cls = conjugacy_class(parse_word("aBbAcCCaBbA", abc));
    std::set<std::string> got;
    for (const auto& m : cls.members)
      got.insert(canonical_to_string(m, abc));
    const std::set<std::string> expected = {"(aBbAcC)C(aBbA)",
                                            "(Bb)A(cC)Ca(Bb)",
                                            "C(aBbACaBbAc)", "bA(cC)CaB"};
    if (got != expected) {
      detail = "class has " + std::to_string(got.size()) + " members";
      return false;
    }
    return true;
  });

  criterion(6, "word problem fixtures and 200 random rewrites", 30.0,
            [](std::string& detail) {
              const Alphabet abc = Alphabet::of("abc");
              if (!words_equal(parse_word("abBcCABb", abc),
                               parse_word("BbacCbBA", abc))) {
                detail = "idempotent pair not equal";
                return false;
              }
              std::mt19937_64 rng(20240817);
              for (int trial = 0; trial < 200; ++trial) {
                Word w = random_word(rng);
                const CanonicalWord canon = canonical_of(w);
                w = random_rewrite(w, rng);
                if (!(canonical_of(w) == canon)) {
                  detail = "rewrite changed the canonical form";
                  return false;
                }
              }
              return true;
            });

  criterion(7, "idempotent class-size evidence, length <= 8 over {a,b}",
            120.0, [](std::string& detail) {
              const auto report =
                  idempotent_class_experiment(Alphabet::of("ab"), 8);
              if (report.rows.empty()) {
                detail = "no idempotents enumerated";
                return false;
              }
              for (const auto& row : report.rows) {
                if (row.predicted != row.length / 2 + 1) {
                  detail = "prediction column wrong";
                  return false;
                }
              }
              detail = std::to_string(report.rows.size()) + " idempotents, " +
                       std::to_string(report.discrepancy_rows.size()) +
                       " discrepancies flagged";
              return true;
            });

  criterion(8, "bicyclic oracle agreement, verified conjugators, witness",
            10.0, [](std::string& detail) {
              for (std::int64_t a = 0; a <= 8; ++a)
                for (std::int64_t b = 0; b <= 8; ++b)
                  for (std::int64_t c = 0; c <= 8; ++c)
                    for (std::int64_t d = 0; d <= 8; ++d) {
                      const BicyclicPair p{a, b}, q{c, d};
                      if (b_conjugate(p, q) != b_oracle_conjugate(p, q, 16)) {
                        detail = "oracle mismatch at " + to_string(p) + "," +
                                 to_string(q);
                        return false;
                      }
                      if (b_conjugate(p, q)) {
                        const BicyclicPair g = b_conjugator(p, q);
                        if (!(b_mul(b_mul(g.inverse(), q), g) == p) ||
                            !(b_mul(b_mul(g, p), g.inverse()) == q)) {
                          detail = "conjugator failed verification";
                          return false;
                        }
                      }
                    }
              const auto w = b_stability_witness();
              if (!(w.conjugate && w.strictly_below && w.distinct)) {
                detail = "stability witness incomplete";
                return false;
              }
              return true;
            });

  criterion(9, "McAlister criterion matches table conjugacy on both triples",
            5.0, [](std::string& detail) {
              for (const McAlisterTriple& t :
                   {trivial_2chain(), z2_three_point()}) {
                const PSemigroup p = PSemigroup::build(t);
                const auto s = InverseSemigroup::from_table(p.export_table());
                const Partition conj = iconj_classes(s);
                for (int u = 0; u < p.size(); ++u) {
                  for (int v = 0; v < p.size(); ++v) {
                    if (p.p_conjugate(u, v) != conj.same(u, v)) {
                      detail = p.name(u) + " vs " + p.name(v);
                      return false;
                    }
                  }
                }
              }
              return true;
            });

  criterion(10, "finite-table theorem suite on the fixture corpus", 120.0,
            [](std::string& detail) {
              const std::vector<std::pair<std::string, CayleyTable>> corpus = {
                  {"I(1)", symmetric_inverse_table(1)},
                  {"I(2)", symmetric_inverse_table(2)},
                  {"I(3)", symmetric_inverse_table(3)},
                  {"B2", brandt_b2()},
                  {"S3", symmetric_group_table(3)},
                  {"Z4x2chain", direct_product(cyclic_group_table(4),
                                               chain_semilattice_table(2))},
                  {"chain3", chain_semilattice_table(3)}};
              for (const auto& [name, table] : corpus) {
                const auto s = InverseSemigroup::from_table(table);
                if (!check_sapir_equivalence(s)) {
                  detail = name + ": sapir sets";
                  return false;
                }
                if (!check_upward_closure(s)) {
                  detail = name + ": upward closure";
                  return false;
                }
                if (same_g_counterexample(s)) {
                  detail = name + ": witness carry-over to idempotent pairs";
                  return false;
                }
                if (iconj_within_d_counterexample(s)) {
                  detail = name + ": conjugacy not inside D";
                  return false;
                }
                if (inv_pair_conjugate_counterexample(s)) {
                  detail = name + ": xx^-1 vs x^-1x";
                  return false;
                }
                try {
                  // cross-validates clifford five ways, semilattice,
                  // H-trivial, commutative, singleton, finite stability
                  characterize(s);
                } catch (const std::exception& e) {
                  detail = name + ": " + e.what();
                  return false;
                }
                if (!(n_conjugacy_classes(s) == iconj_classes(s))) {
                  detail = name + ": four-equation conjugacy differs";
                  return false;
                }
              }
              for (const char* name : {"I(2)", "I(3)"}) {
                const auto s = InverseSemigroup::from_table(
                    symmetric_inverse_table(name[2] - '0'));
                const auto r = check_factorizable_unit_conjugacy(s);
                if (!r.is_factorizable || !r.sim_u_equals_sim_i) {
                  detail = std::string(name) + ": factorizable conjugacy";
                  return false;
                }
              }
              return true;
            });

  if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures ? 1 : 0;
}
