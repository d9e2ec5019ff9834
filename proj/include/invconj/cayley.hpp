#ifndef INVCONJ_CAYLEY_HPP_
#define INVCONJ_CAYLEY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "invconj/errors.hpp"

namespace invconj {

// A finite semigroup given by its multiplication table. Element identifiers
// are opaque strings; every internal computation works on indices.
struct CayleyTable {
  std::vector<std::string> elements;
  // table[i][j] = index of elements[i] * elements[j]
  std::vector<std::vector<int>> table;
  bool has_adjoined_identity = false;

  int size() const { return static_cast<int>(elements.size()); }
  int prod(int i, int j) const { return table[i][j]; }

  // Throws UnknownElement when the name is not declared.
  int index_of(const std::string& name) const;
};

struct Violation {
  std::string kind;            // NonAssociative | NotRegular | IdempotentsDontCommute
  std::vector<int> elements;   // offending indices
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

// Structural sanity: nonempty, square, entries in range. Throws BadTable.
void check_shape(const CayleyTable& t);

// Associativity, regularity and commuting idempotents; together these say
// the table is an inverse semigroup.
ValidationReport validate_inverse(const CayleyTable& t);

std::optional<int> identity_index(const CayleyTable& t);

// Returns t itself when an identity exists, otherwise t extended by a fresh
// identity element with has_adjoined_identity set.
CayleyTable adjoin_identity(const CayleyTable& t);

struct Partition {
  std::vector<std::vector<int>> classes;  // each sorted; ordered by least member
  std::vector<int> class_of;

  int count() const { return static_cast<int>(classes.size()); }
  bool same(int a, int b) const { return class_of[a] == class_of[b]; }
  bool operator==(const Partition&) const = default;
};

// Builds the partition induced by class_of-style labels (any ints).
Partition partition_from_labels(const std::vector<int>& labels);

struct GreenData {
  Partition l, r, h, d, j;
};

int default_max_table_size();  // 300, CLI may override via INVCONJ_MAX_TABLE

// A validated inverse-semigroup table with precomputed inverses, idempotent
// flags and the S^1 view every conjugacy scan ranges over. Immutable after
// construction; all member queries are const and thread-safe.
class InverseSemigroup {
 public:
  // Runs check_shape and validate_inverse eagerly; throws ValidationFailed
  // with the offending facts, or TableTooLarge beyond max_size.
  static InverseSemigroup from_table(CayleyTable t,
                                     int max_size = default_max_table_size());

  const CayleyTable& table() const { return s_; }
  int size() const { return n_; }
  int prod(int a, int b) const { return s_.table[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int unique_inverse(int a) const { return inv_[a]; }
  bool idempotent(int a) const { return idem_[a]; }
  std::vector<int> idempotents() const;
  const std::string& name(int a) const { return s_.elements[a]; }

  // S^1 view. Indices 0..size()-1 are the elements of S; when S is not a
  // monoid, index size() is the adjoined identity. For monoids S^1 = S.
  int s1_size() const { return n1_; }
  int identity1() const { return id1_; }
  bool is_monoid() const { return n1_ == n_; }
  int prod1(int a, int b) const { return t1_[a][b]; }
  int inv1(int a) const { return inv1_[a]; }
  bool idempotent1(int a) const { return idem1_[a]; }
  // Name of an S^1 element (the adjoined identity prints as "1").
  std::string name1(int a) const;

  // Natural partial order, a <= b iff a = eb for an idempotent e; computed
  // with the closed form b^-1 a = a^-1 a.
  bool natural_leq(int a, int b) const;
  bool natural_leq1(int a, int b) const;  // on S^1

  // L from principal left ideals, R dually, J from two-sided ideals,
  // H = L n R, D as the join of L and R.
  GreenData green_relations() const;

 private:
  InverseSemigroup() = default;

  CayleyTable s_;
  int n_ = 0;
  int n1_ = 0;
  int id1_ = 0;
  std::vector<int> inv_;
  std::vector<bool> idem_;
  std::vector<std::vector<int>> t1_;
  std::vector<int> inv1_;
  std::vector<bool> idem1_;
};

// e a idempotent with e idempotent forces a idempotent.
bool is_e_unitary(const InverseSemigroup& s);

// Test helper: the defining exists-idempotent form of (N) and its four
// closed forms agree on every pair.
bool natural_leq_all_forms_agree(const InverseSemigroup& s);

}  // namespace invconj

#endif  // INVCONJ_CAYLEY_HPP_
