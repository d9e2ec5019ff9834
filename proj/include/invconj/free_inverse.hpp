#ifndef INVCONJ_FREE_INVERSE_HPP_
#define INVCONJ_FREE_INVERSE_HPP_

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "invconj/errors.hpp"

namespace invconj {

int max_alphabet();            // 6
int max_word_length();         // 64
int max_idem_experiment_len(); // 10

// Generator symbols are distinct lowercase letters; the uppercase of a
// symbol denotes its inverse in word syntax.
struct Alphabet {
  std::vector<char> symbols;

  static Alphabet of(const std::string& letters);  // CapExceeded beyond 6
  int size() const { return static_cast<int>(symbols.size()); }
  int index_of(char c) const;  // -1 when absent
};

struct Letter {
  std::int8_t base = 0;  // index into the alphabet
  bool inverted = false;

  Letter inverse() const { return Letter{base, !inverted}; }
  // a < a^-1 < b < b^-1 < ...: the fixed order used everywhere output must
  // be deterministic.
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;  // nonempty as a semigroup element

Word parse_word(const std::string& text, const Alphabet& a);
std::string word_to_string(const Word& w, const Alphabet& a);

// A canonical idempotent as a tree: each child edge is labeled by the letter
// walking into the branch, children sorted by letter and pairwise distinct.
// The factor for child (y, t) reads y t y^-1.
struct IdempotentTree {
  std::vector<std::pair<Letter, IdempotentTree>> children;

  bool empty() const { return children.empty(); }
  int edge_count() const;
  // Word length of the idempotent: twice the edge count.
  int length() const { return 2 * edge_count(); }
  Word flatten() const;

  bool operator==(const IdempotentTree&) const;
};

// u_0 e_1 u_1 ... e_m u_m: reduced root pieces (ends may be empty, middles
// are not) interleaved with nonempty canonical idempotents. Structural
// equality decides the word problem.
struct CanonicalWord {
  std::vector<Word> root_pieces;            // m+1 entries
  std::vector<IdempotentTree> idempotent_pieces;  // m entries

  int piece_count() const { return static_cast<int>(idempotent_pieces.size()); }
  Word root() const;
  bool is_idempotent() const;
  int length() const;

  bool operator==(const CanonicalWord&) const;
};

// Canonical form via the birooted word tree: walk w through the free-group
// prefix graph, take root pieces from the geodesic between the two roots and
// idempotent trees from the branches hanging off it.
CanonicalWord canonical_of(const Word& w);

Word canonical_to_word(const CanonicalWord& w);
std::string canonical_to_string(const CanonicalWord& w, const Alphabet& a);

bool words_equal(const Word& u, const Word& v);

// The letters x with x admissible first and x^-1 admissible last: exactly
// the letters by which the word can be conjugated.
std::set<Letter> a_set(const CanonicalWord& w);
std::set<Letter> a_set(const Word& w);

// Canonical form of x^-1 w x; throws NotInASet when x is not in A(w).
CanonicalWord conj_by_letter(const CanonicalWord& w, Letter x);

struct ConjugacyTree {
  struct Node {
    CanonicalWord word;
    int parent = -1;       // -1 at the root
    Letter via{};          // conjugating letter from the parent
    std::vector<int> children;
  };
  std::vector<Node> nodes;  // nodes[0] is the root
};

struct ConjugacyClass {
  std::vector<CanonicalWord> members;  // expansion order, members[0] = root
  ConjugacyTree tree;
};

// Worklist closure under single-letter conjugation, deduplicated by
// canonical form. Always terminates: conjugacy classes are finite.
ConjugacyClass conjugacy_class(const Word& w);

bool conjugate_words(const Word& u, const Word& v);
bool is_singleton_class(const Word& w);

struct IdempotentExperimentRow {
  std::string idempotent;  // canonical serialization
  int length = 0;
  int class_size = 0;
  int predicted = 0;  // length/2 + 1
};

struct IdempotentExperimentReport {
  std::vector<IdempotentExperimentRow> rows;
  std::vector<int> discrepancy_rows;  // indices with class_size != predicted
};

// Enumerates every canonical idempotent of word length <= max_len over the
// alphabet and records each class size against the predicted length/2 + 1.
// The report carries evidence only; nothing is asserted about the prediction.
IdempotentExperimentReport idempotent_class_experiment(const Alphabet& a,
                                                       int max_len);

// All canonical idempotents of word length <= max_len, as trees.
std::vector<IdempotentTree> enumerate_canonical_idempotents(const Alphabet& a,
                                                            int max_len);

}  // namespace invconj

#endif  // INVCONJ_FREE_INVERSE_HPP_
