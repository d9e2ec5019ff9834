#ifndef INVCONJ_MCALISTER_HPP_
#define INVCONJ_MCALISTER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "invconj/cayley.hpp"

namespace invconj {

struct Poset {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq;  // leq[i][j]: element i <= element j

  int size() const { return static_cast<int>(elements.size()); }
  int index_of(const std::string& name) const;
};

// (G, X, Y): a group acting on a poset X by order-automorphisms, with Y an
// order-ideal meet-subsemilattice such that GY = X and gY n Y is never empty.
struct McAlisterTriple {
  CayleyTable group;
  Poset poset;
  std::vector<int> ideal;                 // sorted poset indices forming Y
  std::vector<std::vector<int>> action;   // action[g][x] = poset index of gx
};

struct TripleViolation {
  std::string kind;  // MeetMissing | NotOrderIdeal | NotOrderAutomorphism |
                     // CoverageFailure | BadPoset | NotGroup
  std::string detail;
};

struct TripleValidation {
  bool valid = true;
  std::vector<TripleViolation> violations;
};

// Exhaustive check of the four triple conditions plus the structural
// prerequisites (poset axioms, group table really a group, action totality).
TripleValidation validate_triple(const McAlisterTriple& t);

struct PElement {
  int y = 0;  // poset index, member of the ideal
  int g = 0;  // group index

  bool operator==(const PElement&) const = default;
};

// P(G,X,Y) = {(A,g) : A in Y, g^-1 A in Y} with (A,g)(B,h) = (A ^ gB, gh).
class PSemigroup {
 public:
  // Validates the triple first; throws InvalidTriple carrying the report.
  // ClosureFailure signals an invalid triple that slipped through.
  static PSemigroup build(const McAlisterTriple& t);

  int size() const { return static_cast<int>(elems_.size()); }
  const PElement& element(int i) const { return elems_[i]; }
  int index_of(const PElement& e) const;  // -1 when absent
  int mul(int i, int j) const { return mul_[i][j]; }
  int inv(int i) const;
  std::string name(int i) const;  // "(A,g)"
  const McAlisterTriple& triple() const { return t_; }

  // Least (C,k) in P with A = kB = C ^ gC ^ A and g = k h k^-1, in element
  // order; nullopt when no internal witness exists.
  std::optional<int> conjugating_witness(int u, int v) const;
  // The criterion above, or u == v (the adjoined identity conjugates equal
  // elements even when no internal witness does).
  bool p_conjugate(int u, int v) const;

  // Greatest lower bound in the poset, -1 when missing.
  int meet(int x, int y) const { return meet_[x][y]; }

  CayleyTable export_table() const;

 private:
  PSemigroup() = default;

  McAlisterTriple t_;
  std::vector<PElement> elems_;
  std::vector<std::vector<int>> mul_;
  std::vector<std::vector<int>> meet_;
  std::vector<int> group_inv_;
  int group_id_ = 0;
};

}  // namespace invconj

#endif  // INVCONJ_MCALISTER_HPP_
