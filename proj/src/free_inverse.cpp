#include "invconj/free_inverse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace invconj {

int max_alphabet() { return 6; }
int max_word_length() { return 64; }
int max_idem_experiment_len() { return 10; }

Alphabet Alphabet::of(const std::string& letters) {
  Alphabet a;
  for (char c : letters) {
    if (!std::islower(static_cast<unsigned char>(c)))
      throw Error("BadAlphabet", "generators must be lowercase letters");
    if (std::find(a.symbols.begin(), a.symbols.end(), c) == a.symbols.end())
      a.symbols.push_back(c);
  }
  std::sort(a.symbols.begin(), a.symbols.end());
  if (a.symbols.empty()) throw Error("BadAlphabet", "alphabet may not be empty");
  if (a.size() > max_alphabet())
    throw Error("CapExceeded", "alphabet is capped at " +
                                   std::to_string(max_alphabet()) + " letters");
  return a;
}

int Alphabet::index_of(char c) const {
  for (int i = 0; i < size(); ++i)
    if (symbols[i] == c) return i;
  return -1;
}

Word parse_word(const std::string& text, const Alphabet& a) {
  if (text.empty()) throw Error("EmptyWord", "the empty word is not an element");
  if (static_cast<int>(text.size()) > max_word_length())
    throw Error("CapExceeded", "words are capped at " +
                                   std::to_string(max_word_length()) +
                                   " letters");
  Word w;
  for (char c : text) {
    const bool inverted = std::isupper(static_cast<unsigned char>(c)) != 0;
    const char base = inverted
                          ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
                          : c;
    const int idx = a.index_of(base);
    if (idx < 0)
      throw Error("UnknownLetter",
                  std::string("letter '") + c + "' is not in the alphabet");
    w.push_back(Letter{static_cast<std::int8_t>(idx), inverted});
  }
  return w;
}

std::string word_to_string(const Word& w, const Alphabet& a) {
  std::string out;
  for (const Letter& l : w) {
    const char c = a.symbols[l.base];
    out += l.inverted ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
                      : c;
  }
  return out;
}

int IdempotentTree::edge_count() const {
  int n = 0;
  for (const auto& [letter, sub] : children) n += 1 + sub.edge_count();
  return n;
}

Word IdempotentTree::flatten() const {
  Word out;
  for (const auto& [letter, sub] : children) {
    out.push_back(letter);
    const Word inner = sub.flatten();
    out.insert(out.end(), inner.begin(), inner.end());
    out.push_back(letter.inverse());
  }
  return out;
}

bool IdempotentTree::operator==(const IdempotentTree& other) const {
  return children == other.children;
}

Word CanonicalWord::root() const {
  Word out;
  for (const Word& piece : root_pieces)
    out.insert(out.end(), piece.begin(), piece.end());
  return out;
}

bool CanonicalWord::is_idempotent() const {
  return piece_count() == 1 && root().empty();
}

int CanonicalWord::length() const {
  int n = 0;
  for (const Word& piece : root_pieces) n += static_cast<int>(piece.size());
  for (const IdempotentTree& e : idempotent_pieces) n += e.length();
  return n;
}

bool CanonicalWord::operator==(const CanonicalWord& other) const {
  return root_pieces == other.root_pieces &&
         idempotent_pieces == other.idempotent_pieces;
}

namespace {

// The birooted word tree: walk the word through the free-group prefix graph.
// Since the ambient graph is a tree, each vertex's discovery parent is its
// neighbor toward the origin.
struct WordTree {
  struct Vertex {
    std::map<Letter, int> nbr;
    int parent = -1;
    Letter parent_letter{};
  };
  std::vector<Vertex> v;
  int end = 0;
};

WordTree build_word_tree(const Word& w) {
  WordTree t;
  t.v.emplace_back();
  int cur = 0;
  for (const Letter& y : w) {
    auto it = t.v[cur].nbr.find(y);
    int nxt;
    if (it != t.v[cur].nbr.end()) {
      nxt = it->second;
    } else {
      nxt = static_cast<int>(t.v.size());
      t.v.emplace_back();
      t.v[nxt].parent = cur;
      t.v[nxt].parent_letter = y;
      t.v[cur].nbr[y] = nxt;
      t.v[nxt].nbr[y.inverse()] = cur;
    }
    cur = nxt;
  }
  t.end = cur;
  return t;
}

IdempotentTree branch_tree(const WordTree& t, int vertex, int from) {
  IdempotentTree out;
  for (const auto& [letter, nb] : t.v[vertex].nbr) {
    if (nb == from) continue;
    out.children.emplace_back(letter, branch_tree(t, nb, vertex));
  }
  return out;
}

}  // namespace

CanonicalWord canonical_of(const Word& w) {
  if (w.empty()) throw Error("EmptyWord", "the empty word is not an element");
  const WordTree t = build_word_tree(w);

  // Geodesic from the origin to the end root; its letters spell the root.
  std::vector<int> geo;
  for (int x = t.end; x != -1; x = t.v[x].parent) geo.push_back(x);
  std::reverse(geo.begin(), geo.end());

  CanonicalWord out;
  Word run;
  for (size_t j = 0; j < geo.size(); ++j) {
    const int prev = j > 0 ? geo[j - 1] : -1;
    const int next = j + 1 < geo.size() ? geo[j + 1] : -1;
    IdempotentTree branches;
    for (const auto& [letter, nb] : t.v[geo[j]].nbr) {
      if (nb == prev || nb == next) continue;
      branches.children.emplace_back(letter, branch_tree(t, nb, geo[j]));
    }
    if (!branches.children.empty()) {
      out.root_pieces.push_back(run);
      out.idempotent_pieces.push_back(std::move(branches));
      run.clear();
    }
    if (next != -1) run.push_back(t.v[next].parent_letter);
  }
  out.root_pieces.push_back(run);
  return out;
}

Word canonical_to_word(const CanonicalWord& w) {
  Word out;
  for (size_t i = 0; i < w.root_pieces.size(); ++i) {
    out.insert(out.end(), w.root_pieces[i].begin(), w.root_pieces[i].end());
    if (i < w.idempotent_pieces.size()) {
      const Word e = w.idempotent_pieces[i].flatten();
      out.insert(out.end(), e.begin(), e.end());
    }
  }
  return out;
}

namespace {

void tree_to_stream(const IdempotentTree& t, const Alphabet& a,
                    std::ostream& out) {
  for (const auto& [letter, sub] : t.children) {
    const char c = a.symbols[letter.base];
    out << (letter.inverted
                ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
                : c);
    tree_to_stream(sub, a, out);
    const char ci = a.symbols[letter.base];
    out << (letter.inverted
                ? ci
                : static_cast<char>(std::toupper(static_cast<unsigned char>(ci))));
  }
}

}  // namespace

std::string canonical_to_string(const CanonicalWord& w, const Alphabet& a) {
  std::ostringstream out;
  for (size_t i = 0; i < w.root_pieces.size(); ++i) {
    out << word_to_string(w.root_pieces[i], a);
    if (i < w.idempotent_pieces.size()) {
      out << "(";
      tree_to_stream(w.idempotent_pieces[i], a, out);
      out << ")";
    }
  }
  return out.str();
}

bool words_equal(const Word& u, const Word& v) {
  return canonical_of(u) == canonical_of(v);
}

std::set<Letter> a_set(const CanonicalWord& w) {
  std::set<Letter> first;  // A_1(w)
  std::set<Letter> last;   // A_2(w)

  if (w.is_idempotent()) {
    for (const auto& [letter, sub] : w.idempotent_pieces[0].children) {
      first.insert(letter);
      last.insert(letter.inverse());
    }
  } else {
    const auto& pieces = w.root_pieces;
    if (!pieces.front().empty()) {
      first.insert(pieces.front().front());
    } else {
      for (const auto& [letter, sub] : w.idempotent_pieces.front().children)
        first.insert(letter);
      first.insert(pieces[1].front());
    }
    if (!pieces.back().empty()) {
      last.insert(pieces.back().back());
    } else {
      for (const auto& [letter, sub] : w.idempotent_pieces.back().children)
        last.insert(letter.inverse());
      last.insert(pieces[pieces.size() - 2].back());
    }
  }

  std::set<Letter> out;
  for (const Letter& x : first)
    if (last.count(x.inverse())) out.insert(x);
  return out;
}

std::set<Letter> a_set(const Word& w) { return a_set(canonical_of(w)); }

CanonicalWord conj_by_letter(const CanonicalWord& w, Letter x) {
  const auto admissible = a_set(w);
  if (!admissible.count(x))
    throw Error("NotInASet", "letter is not in A(w)");
  Word conjugated;
  conjugated.push_back(x.inverse());
  const Word mid = canonical_to_word(w);
  conjugated.insert(conjugated.end(), mid.begin(), mid.end());
  conjugated.push_back(x);
  return canonical_of(conjugated);
}

namespace {

// Structural key for worklist dedup; injective on canonical forms.
std::string structural_key(const IdempotentTree& t) {
  std::string out;
  for (const auto& [letter, sub] : t.children) {
    out += static_cast<char>('0' + letter.base);
    out += letter.inverted ? '-' : '+';
    out += '[';
    out += structural_key(sub);
    out += ']';
  }
  return out;
}

std::string structural_key(const CanonicalWord& w) {
  std::string out;
  for (size_t i = 0; i < w.root_pieces.size(); ++i) {
    for (const Letter& l : w.root_pieces[i]) {
      out += static_cast<char>('0' + l.base);
      out += l.inverted ? '-' : '+';
    }
    if (i < w.idempotent_pieces.size()) {
      out += '(';
      out += structural_key(w.idempotent_pieces[i]);
      out += ')';
    }
  }
  return out;
}

}  // namespace

ConjugacyClass conjugacy_class(const Word& w) {
  ConjugacyClass result;
  std::map<std::string, int> seen;

  ConjugacyTree::Node root;
  root.word = canonical_of(w);
  seen[structural_key(root.word)] = 0;
  result.tree.nodes.push_back(std::move(root));

  for (size_t next = 0; next < result.tree.nodes.size(); ++next) {
    const CanonicalWord current = result.tree.nodes[next].word;
    for (const Letter& x : a_set(current)) {
      CanonicalWord child = conj_by_letter(current, x);
      const std::string key = structural_key(child);
      if (seen.count(key)) continue;
      const int id = static_cast<int>(result.tree.nodes.size());
      seen[key] = id;
      ConjugacyTree::Node node;
      node.word = std::move(child);
      node.parent = static_cast<int>(next);
      node.via = x;
      result.tree.nodes.push_back(std::move(node));
      result.tree.nodes[next].children.push_back(id);
    }
  }

  result.members.reserve(result.tree.nodes.size());
  for (const auto& node : result.tree.nodes) result.members.push_back(node.word);
  return result;
}

bool conjugate_words(const Word& u, const Word& v) {
  const CanonicalWord target = canonical_of(v);
  for (const CanonicalWord& member : conjugacy_class(u).members)
    if (member == target) return true;
  return false;
}

bool is_singleton_class(const Word& w) { return a_set(w).empty(); }

std::vector<IdempotentTree> enumerate_canonical_idempotents(const Alphabet& a,
                                                            int max_len) {
  if (max_len < 2) return {};
  const int max_edges = max_len / 2;
  std::vector<Letter> letters;
  for (int b = 0; b < a.size(); ++b) {
    letters.push_back(Letter{static_cast<std::int8_t>(b), false});
    letters.push_back(Letter{static_cast<std::int8_t>(b), true});
  }

  // memo[banned+1][budget]: all trees with at most `budget` edges whose root
  // children avoid letters[banned], the letter walking back to the parent.
  std::vector<std::vector<std::vector<IdempotentTree>>> memo(
      letters.size() + 1,
      std::vector<std::vector<IdempotentTree>>(max_edges + 1));
  std::vector<std::vector<bool>> done(letters.size() + 1,
                                      std::vector<bool>(max_edges + 1, false));

  auto gen = [&](auto&& self, int budget, int banned)
      -> const std::vector<IdempotentTree>& {
    auto& slot = memo[banned + 1][budget];
    if (done[banned + 1][budget]) return slot;
    done[banned + 1][budget] = true;
    // Children are attached in strictly increasing letter order, so each
    // shape is produced exactly once.
    auto place = [&](auto&& place_self, size_t li, int left,
                     const IdempotentTree& cur) -> void {
      slot.push_back(cur);
      if (left == 0) return;
      for (size_t i = li; i < letters.size(); ++i) {
        if (static_cast<int>(i) == banned) continue;
        const int back = static_cast<int>(i) ^ 1;  // letters pair up x, x^-1
        for (const IdempotentTree& sub : self(self, left - 1, back)) {
          if (sub.edge_count() > left - 1) continue;
          IdempotentTree next = cur;
          next.children.emplace_back(letters[i], sub);
          place_self(place_self, i + 1, left - 1 - sub.edge_count(), next);
        }
      }
    };
    place(place, 0, budget, IdempotentTree{});
    return slot;
  };

  std::vector<IdempotentTree> out;
  for (const IdempotentTree& t : gen(gen, max_edges, -1))
    if (!t.children.empty()) out.push_back(t);
  std::sort(out.begin(), out.end(),
            [](const IdempotentTree& x, const IdempotentTree& y) {
              const int ex = x.edge_count(), ey = y.edge_count();
              if (ex != ey) return ex < ey;
              return structural_key(x) < structural_key(y);
            });
  return out;
}

IdempotentExperimentReport idempotent_class_experiment(const Alphabet& a,
                                                       int max_len) {
  if (max_len > max_idem_experiment_len())
    throw Error("CapExceeded",
                "experiment is capped at length " +
                    std::to_string(max_idem_experiment_len()));
  IdempotentExperimentReport report;
  for (const IdempotentTree& e : enumerate_canonical_idempotents(a, max_len)) {
    IdempotentExperimentRow row;
    row.length = e.length();
    CanonicalWord cw;
    cw.root_pieces = {Word{}, Word{}};
    cw.idempotent_pieces = {e};
    row.idempotent = canonical_to_string(cw, a);
    row.class_size =
        static_cast<int>(conjugacy_class(e.flatten()).members.size());
    row.predicted = row.length / 2 + 1;
    if (row.class_size != row.predicted)
      report.discrepancy_rows.push_back(static_cast<int>(report.rows.size()));
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace invconj
