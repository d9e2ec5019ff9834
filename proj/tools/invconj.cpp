#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>

#include "invconj/bicyclic.hpp"
#include "invconj/cayley.hpp"
#include "invconj/chart.hpp"
#include "invconj/conjugacy.hpp"
#include "invconj/errors.hpp"
#include "invconj/free_inverse.hpp"
#include "invconj/json_io.hpp"
#include "invconj/mcalister.hpp"
#include "invconj/partitions.hpp"
#include "invconj/table_builders.hpp"

namespace {

using invconj::json;

bool g_json = false;

void emit_bool(bool value, const char* key) {
  if (g_json) {
    json j;
    j[key] = value;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (value ? "true" : "false") << "\n";
  }
}

int table_cap() {
  if (const char* env = std::getenv("INVCONJ_MAX_TABLE")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return invconj::default_max_table_size();
}

invconj::InverseSemigroup load_inverse(const std::string& path) {
  return invconj::InverseSemigroup::from_table(invconj::load_table(path),
                                               table_cap());
}

// Alphabet from --alphabet when given, else the letters of the words.
invconj::Alphabet alphabet_for(const std::string& requested,
                               std::initializer_list<std::string> words) {
  if (!requested.empty()) return invconj::Alphabet::of(requested);
  std::string letters;
  for (const auto& w : words)
    for (char c : w)
      letters += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return invconj::Alphabet::of(letters);
}

json type_to_json(const invconj::CycleChainType& t) {
  json cycles = json::object();
  for (const auto& [len, cnt] : t.cycle_counts) cycles[std::to_string(len)] = cnt;
  json chains = json::object();
  for (const auto& [len, cnt] : t.chain_counts) chains[std::to_string(len)] = cnt;
  json j;
  j["cycles"] = std::move(cycles);
  j["chains"] = std::move(chains);
  return j;
}

struct ChartArgs {
  std::string ground;
  std::string a, b;
  int rank_bound = 0;
};

void run_chart_type(const ChartArgs& args) {
  const auto ground = invconj::parse_ground(args.ground);
  const auto chart = invconj::parse_chart(args.a, ground);
  const auto type = invconj::cycle_chain_type(chart);
  if (g_json)
    std::cout << type_to_json(type).dump() << "\n";
  else
    std::cout << invconj::to_string(type) << "\n";
}

void run_chart_conj(const ChartArgs& args) {
  const auto ground = invconj::parse_ground(args.ground);
  emit_bool(invconj::conjugate_charts(invconj::parse_chart(args.a, ground),
                                      invconj::parse_chart(args.b, ground)),
            "conjugate");
}

void run_chart_conjugator(const ChartArgs& args, bool permutation) {
  const auto ground = invconj::parse_ground(args.ground);
  const auto a = invconj::parse_chart(args.a, ground);
  const auto b = invconj::parse_chart(args.b, ground);
  const auto tau = permutation ? invconj::build_permutation_conjugator(a, b)
                               : invconj::build_conjugator(a, b);
  if (g_json) {
    json j;
    j["conjugator"] = tau ? json(invconj::to_string(*tau)) : json(nullptr);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (tau ? invconj::to_string(*tau) : "none") << "\n";
  }
}

void run_chart_ideal_conj(const ChartArgs& args) {
  const auto ground = invconj::parse_ground(args.ground);
  emit_bool(
      invconj::conjugate_in_ideal(invconj::parse_chart(args.a, ground),
                                  invconj::parse_chart(args.b, ground),
                                  args.rank_bound),
      "conjugate");
}

void run_count_classes(int n, bool reps) {
  const invconj::bigint count = invconj::class_count(n);
  std::vector<std::string> lines;
  if (reps && n >= 1)
    for (const auto& rep : invconj::enumerate_class_representatives(n))
      lines.push_back(invconj::to_string(rep));
  if (g_json) {
    json j;
    j["n"] = n;
    j["count"] = count.str();
    if (reps) j["representatives"] = lines;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << count.str() << "\n";
    for (const auto& line : lines) std::cout << line << "\n";
  }
}

struct FisArgs {
  std::string w1, w2;
  std::string alphabet;
  bool tree = false;
  int max_len = 8;
};

void run_fis_canon(const FisArgs& args) {
  const auto a = alphabet_for(args.alphabet, {args.w1});
  const auto canon = invconj::canonical_of(invconj::parse_word(args.w1, a));
  const std::string text = invconj::canonical_to_string(canon, a);
  if (g_json) {
    json j;
    j["canonical"] = text;
    j["idempotent"] = canon.is_idempotent();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

void run_fis_eq(const FisArgs& args) {
  const auto a = alphabet_for(args.alphabet, {args.w1, args.w2});
  emit_bool(invconj::words_equal(invconj::parse_word(args.w1, a),
                                 invconj::parse_word(args.w2, a)),
            "equal");
}

void run_fis_conj(const FisArgs& args) {
  const auto a = alphabet_for(args.alphabet, {args.w1, args.w2});
  emit_bool(invconj::conjugate_words(invconj::parse_word(args.w1, a),
                                     invconj::parse_word(args.w2, a)),
            "conjugate");
}

void run_fis_class(const FisArgs& args) {
  const auto a = alphabet_for(args.alphabet, {args.w1});
  const auto cls = invconj::conjugacy_class(invconj::parse_word(args.w1, a));
  if (g_json) {
    json j;
    j["size"] = cls.members.size();
    json members = json::array();
    for (const auto& m : cls.members)
      members.push_back(invconj::canonical_to_string(m, a));
    j["members"] = std::move(members);
    if (args.tree) {
      json nodes = json::array();
      for (const auto& node : cls.tree.nodes) {
        json n;
        n["word"] = invconj::canonical_to_string(node.word, a);
        n["parent"] = node.parent;
        n["via"] = node.parent < 0
                       ? json(nullptr)
                       : json(invconj::word_to_string({node.via}, a));
        nodes.push_back(std::move(n));
      }
      j["tree"] = std::move(nodes);
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "size: " << cls.members.size() << "\n";
    for (size_t i = 0; i < cls.tree.nodes.size(); ++i) {
      const auto& node = cls.tree.nodes[i];
      std::cout << i << ": "
                << invconj::canonical_to_string(node.word, a);
      if (args.tree && node.parent >= 0)
        std::cout << "  (from " << node.parent << " via "
                  << invconj::word_to_string({node.via}, a) << ")";
      std::cout << "\n";
    }
  }
}

void run_fis_idem_experiment(const FisArgs& args) {
  const auto a = invconj::Alphabet::of(
      args.alphabet.empty() ? "ab" : args.alphabet);
  const auto report = invconj::idempotent_class_experiment(a, args.max_len);
  if (g_json) {
    json rows = json::array();
    for (const auto& row : report.rows) {
      json r;
      r["idempotent"] = row.idempotent;
      r["length"] = row.length;
      r["class_size"] = row.class_size;
      r["predicted"] = row.predicted;
      rows.push_back(std::move(r));
    }
    json j;
    j["rows"] = std::move(rows);
    j["discrepancies"] = report.discrepancy_rows;
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& row : report.rows) {
      std::cout << row.idempotent << " length=" << row.length
                << " class=" << row.class_size
                << " predicted=" << row.predicted
                << (row.class_size == row.predicted ? "" : "  MISMATCH")
                << "\n";
    }
    std::cout << "idempotents: " << report.rows.size()
              << ", discrepancies: " << report.discrepancy_rows.size() << "\n";
  }
}

struct BicyclicArgs {
  std::int64_t a = 0, b = 0, c = 0, d = 0;
};

void run_bicyclic_conj(const BicyclicArgs& args) {
  emit_bool(invconj::b_conjugate({args.a, args.b}, {args.c, args.d}),
            "conjugate");
}

void run_bicyclic_conjugator(const BicyclicArgs& args) {
  const auto g = invconj::b_conjugator({args.a, args.b}, {args.c, args.d});
  if (g_json) {
    json j;
    j["conjugator"] = {{"a", g.a}, {"b", g.b}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << invconj::to_string(g) << "\n";
  }
}

void run_bicyclic_witness() {
  const auto r = invconj::b_stability_witness();
  if (g_json) {
    json j;
    j["higher"] = {{"a", r.higher.a}, {"b", r.higher.b}};
    j["lower"] = {{"a", r.lower.a}, {"b", r.lower.b}};
    j["conjugate"] = r.conjugate;
    j["strictly_below"] = r.strictly_below;
    j["distinct"] = r.distinct;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << invconj::to_string(r.lower) << " < "
              << invconj::to_string(r.higher) << ": "
              << (r.strictly_below ? "true" : "false") << "\n"
              << invconj::to_string(r.higher) << " ~ "
              << invconj::to_string(r.lower) << ": "
              << (r.conjugate ? "true" : "false") << "\n"
              << "distinct: " << (r.distinct ? "true" : "false") << "\n";
  }
}

invconj::PElement parse_p_element(const invconj::PSemigroup& p,
                                  const std::string& text) {
  const auto open = text.find('(');
  const auto comma = text.find(',');
  const auto close = text.rfind(')');
  if (open == std::string::npos || comma == std::string::npos ||
      close == std::string::npos || !(open < comma && comma < close))
    throw invconj::Error("BadSyntax",
                         "expected '(A,g)' for a P-element: " + text);
  const std::string a = text.substr(open + 1, comma - open - 1);
  const std::string g = text.substr(comma + 1, close - comma - 1);
  invconj::PElement e;
  e.y = p.triple().poset.index_of(a);
  e.g = p.triple().group.index_of(g);
  if (p.index_of(e) < 0)
    throw invconj::Error("UnknownElement", text + " is not in P");
  return e;
}

void run_psemigroup_validate(const std::string& file) {
  const auto report = invconj::validate_triple(invconj::load_triple(file));
  if (g_json) {
    std::cout << invconj::triple_validation_to_json(report).dump() << "\n";
  } else {
    std::cout << (report.valid ? "valid" : "invalid") << "\n";
    for (const auto& v : report.violations)
      std::cout << v.kind << ": " << v.detail << "\n";
  }
}

void run_psemigroup_conj(const std::string& file, const std::string& u,
                         const std::string& v) {
  const auto p = invconj::PSemigroup::build(invconj::load_triple(file));
  const int iu = p.index_of(parse_p_element(p, u));
  const int iv = p.index_of(parse_p_element(p, v));
  const bool conj = p.p_conjugate(iu, iv);
  if (g_json) {
    json j;
    j["conjugate"] = conj;
    if (conj) {
      const auto w = p.conjugating_witness(iu, iv);
      j["witness"] = w ? json(p.name(*w)) : json("1");
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (conj ? "true" : "false") << "\n";
  }
}

void run_psemigroup_export(const std::string& file) {
  const auto p = invconj::PSemigroup::build(invconj::load_triple(file));
  std::cout << invconj::table_to_json(p.export_table()).dump(2) << "\n";
}

void run_table_analyze(const std::string& file) {
  const auto t = invconj::load_table(file);
  const auto report = invconj::validate_inverse(t);
  if (!report.valid) {
    if (g_json) {
      std::cout << invconj::validation_to_json(report, t).dump() << "\n";
    } else {
      std::cout << "invalid\n";
      for (const auto& v : report.violations) {
        std::cout << v.kind << ":";
        for (int i : v.elements) std::cout << " " << t.elements[i];
        std::cout << "\n";
      }
    }
    return;
  }
  const auto s = invconj::InverseSemigroup::from_table(t, table_cap());
  const auto green = s.green_relations();
  const auto conj = invconj::iconj_classes(s);
  if (g_json) {
    json j;
    j["valid"] = true;
    j["size"] = s.size();
    j["monoid"] = s.is_monoid();
    j["idempotents"] = s.idempotents().size();
    j["green"] = {{"L", green.l.count()}, {"R", green.r.count()},
                  {"H", green.h.count()}, {"D", green.d.count()},
                  {"J", green.j.count()}};
    j["conjugacy_classes"] = invconj::partition_to_json(conj, t)["classes"];
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "valid inverse semigroup, " << s.size() << " elements, "
              << s.idempotents().size() << " idempotents"
              << (s.is_monoid() ? ", monoid" : "") << "\n";
    std::cout << "green classes: L=" << green.l.count()
              << " R=" << green.r.count() << " H=" << green.h.count()
              << " D=" << green.d.count() << " J=" << green.j.count() << "\n";
    std::cout << "conjugacy classes (" << conj.count() << "):\n";
    for (const auto& cls : conj.classes) {
      std::cout << " ";
      for (int x : cls) std::cout << " " << t.elements[x];
      std::cout << "\n";
    }
  }
}

void run_table_conj(const std::string& file, const std::string& a,
                    const std::string& b) {
  const auto s = load_inverse(file);
  const auto set = invconj::conjugator_set(s, s.table().index_of(a),
                                           s.table().index_of(b));
  if (g_json) {
    json j;
    j["conjugate"] = !set.empty();
    json witnesses = json::array();
    for (int g : set.witnesses) witnesses.push_back(s.name1(g));
    j["witnesses"] = std::move(witnesses);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (set.empty() ? "false" : "true") << "\n";
  }
}

void run_table_characterize(const std::string& file) {
  const auto s = load_inverse(file);
  const auto r = invconj::characterize(s);
  if (g_json) {
    std::cout << invconj::characterize_to_json(r).dump() << "\n";
  } else {
    std::cout << "is_clifford: " << (r.is_clifford ? "true" : "false") << "\n"
              << "is_semilattice: " << (r.is_semilattice ? "true" : "false")
              << "\n"
              << "is_h_trivial: " << (r.is_h_trivial ? "true" : "false") << "\n"
              << "is_commutative: " << (r.is_commutative ? "true" : "false")
              << "\n"
              << "is_group: " << (r.is_group ? "true" : "false") << "\n"
              << "conj_universal: " << (r.conj_universal ? "true" : "false")
              << "\n"
              << "conj_identity: " << (r.conj_identity ? "true" : "false")
              << "\n"
              << "conj_meet_order_identity: "
              << (r.conj_meet_order_identity ? "true" : "false") << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conjugacy computations in inverse semigroups"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "emit JSON instead of text");

  ChartArgs chart_args;
  auto add_ground = [&](CLI::App* cmd) {
    cmd->add_option("--ground", chart_args.ground,
                    "ground set, e.g. '1..9' or 'a b c'")
        ->required();
  };

  auto* chart_type = app.add_subcommand("chart-type", "cycle-chain type");
  add_ground(chart_type);
  chart_type->add_option("chart", chart_args.a)->required();

  auto* chart_conj = app.add_subcommand("chart-conj", "are two charts conjugate");
  add_ground(chart_conj);
  chart_conj->add_option("a", chart_args.a)->required();
  chart_conj->add_option("b", chart_args.b)->required();

  auto* chart_conjugator =
      app.add_subcommand("chart-conjugator", "build a conjugating chart");
  add_ground(chart_conjugator);
  chart_conjugator->add_option("a", chart_args.a)->required();
  chart_conjugator->add_option("b", chart_args.b)->required();
  bool permutation = false;
  chart_conjugator->add_flag("--permutation", permutation,
                             "extend to a total permutation");

  auto* chart_ideal =
      app.add_subcommand("chart-ideal-conj", "conjugacy inside the ideal J_r");
  add_ground(chart_ideal);
  chart_ideal->add_option("-r,--ideal-rank", chart_args.rank_bound)->required();
  chart_ideal->add_option("a", chart_args.a)->required();
  chart_ideal->add_option("b", chart_args.b)->required();

  int count_n = 0;
  bool count_reps = false;
  auto* count = app.add_subcommand(
      "count-classes", "conjugacy classes of the partial injections on n points");
  count->add_option("n", count_n)->required()->check(CLI::NonNegativeNumber);
  count->add_flag("--reps", count_reps, "print one representative per class");

  FisArgs fis_args;
  auto add_alphabet = [&](CLI::App* cmd) {
    cmd->add_option("--alphabet", fis_args.alphabet,
                    "generators (default: letters of the input)");
  };
  auto* fis_canon = app.add_subcommand("fis-canon", "canonical form of a word");
  fis_canon->add_option("word", fis_args.w1)->required();
  add_alphabet(fis_canon);
  auto* fis_eq = app.add_subcommand("fis-eq", "word problem");
  fis_eq->add_option("w1", fis_args.w1)->required();
  fis_eq->add_option("w2", fis_args.w2)->required();
  add_alphabet(fis_eq);
  auto* fis_class = app.add_subcommand("fis-class", "conjugacy class of a word");
  fis_class->add_option("word", fis_args.w1)->required();
  fis_class->add_flag("--tree", fis_args.tree, "show the conjugacy tree");
  add_alphabet(fis_class);
  auto* fis_conj = app.add_subcommand("fis-conj", "conjugacy of two words");
  fis_conj->add_option("w1", fis_args.w1)->required();
  fis_conj->add_option("w2", fis_args.w2)->required();
  add_alphabet(fis_conj);
  auto* fis_idem = app.add_subcommand(
      "fis-idem-experiment", "class sizes of canonical idempotents");
  fis_idem->add_option("--max-len", fis_args.max_len)->required();
  fis_idem->add_option("--alphabet", fis_args.alphabet,
                       "generators (default: ab)");

  BicyclicArgs bic;
  auto add_pairs = [&](CLI::App* cmd) {
    cmd->add_option("a", bic.a)->required();
    cmd->add_option("b", bic.b)->required();
    cmd->add_option("c", bic.c)->required();
    cmd->add_option("d", bic.d)->required();
  };
  auto* bconj = app.add_subcommand("bicyclic-conj",
                                   "conjugacy of (a,b) and (c,d)");
  add_pairs(bconj);
  auto* bwit = app.add_subcommand("bicyclic-conjugator",
                                  "conjugating pair for (a,b) and (c,d)");
  add_pairs(bwit);
  app.add_subcommand("bicyclic-witness",
                     "the instability witness (1,1) ~ (2,2)");

  auto* psg = app.add_subcommand("psemigroup", "McAlister P-semigroups");
  psg->require_subcommand(1);
  std::string psg_file, psg_u, psg_v;
  auto* psg_validate = psg->add_subcommand("validate", "check the triple");
  psg_validate->add_option("file", psg_file)->required();
  auto* psg_conj = psg->add_subcommand("conj", "conjugacy of two P-elements");
  psg_conj->add_option("file", psg_file)->required();
  psg_conj->add_option("u", psg_u)->required();
  psg_conj->add_option("v", psg_v)->required();
  auto* psg_export = psg->add_subcommand("export", "emit the Cayley table");
  psg_export->add_option("file", psg_file)->required();

  auto* table = app.add_subcommand("table", "finite inverse semigroup tables");
  table->require_subcommand(1);
  std::string table_file, table_a, table_b;
  auto* table_analyze = table->add_subcommand("analyze", "validate and survey");
  table_analyze->add_option("file", table_file)->required();
  auto* table_conj = table->add_subcommand("conj", "conjugacy of two elements");
  table_conj->add_option("file", table_file)->required();
  table_conj->add_option("a", table_a)->required();
  table_conj->add_option("b", table_b)->required();
  auto* table_char = table->add_subcommand("characterize", "theorem report");
  table_char->add_option("file", table_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    json err;
    err["error"] = "BadUsage";
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 2;
  }

  try {
    if (chart_type->parsed()) run_chart_type(chart_args);
    else if (chart_conj->parsed()) run_chart_conj(chart_args);
    else if (chart_conjugator->parsed()) run_chart_conjugator(chart_args, permutation);
    else if (chart_ideal->parsed()) run_chart_ideal_conj(chart_args);
    else if (count->parsed()) run_count_classes(count_n, count_reps);
    else if (fis_canon->parsed()) run_fis_canon(fis_args);
    else if (fis_eq->parsed()) run_fis_eq(fis_args);
    else if (fis_class->parsed()) run_fis_class(fis_args);
    else if (fis_conj->parsed()) run_fis_conj(fis_args);
    else if (fis_idem->parsed()) run_fis_idem_experiment(fis_args);
    else if (bconj->parsed()) run_bicyclic_conj(bic);
    else if (bwit->parsed()) run_bicyclic_conjugator(bic);
    else if (app.get_subcommand("bicyclic-witness")->parsed()) run_bicyclic_witness();
    else if (psg_validate->parsed()) run_psemigroup_validate(psg_file);
    else if (psg_conj->parsed()) run_psemigroup_conj(psg_file, psg_u, psg_v);
    else if (psg_export->parsed()) run_psemigroup_export(psg_file);
    else if (table_analyze->parsed()) run_table_analyze(table_file);
    else if (table_conj->parsed()) run_table_conj(table_file, table_a, table_b);
    else if (table_char->parsed()) run_table_characterize(table_file);
  } catch (const invconj::Error& e) {
    json err;
    err["error"] = e.code();
    err["message"] = e.message();
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err;
    err["error"] = "Internal";
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}
