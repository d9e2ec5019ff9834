#ifndef INVCONJ_CHART_HPP_
#define INVCONJ_CHART_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invconj/errors.hpp"

namespace invconj {

// Point identifiers compare numerically when both are all digits, otherwise
// lexicographically.
bool point_less(const std::string& a, const std::string& b);

// Sorted, duplicate-free point identifiers.
using GroundSet = std::vector<std::string>;

GroundSet make_ground(std::vector<std::string> points);
// "1..9", or a comma/space separated point list.
GroundSet parse_ground(const std::string& text);

// A partial injective transformation on a fixed finite ground set. Values
// are immutable; composition and friends return new charts.
class Chart {
 public:
  explicit Chart(GroundSet ground);
  // img[i] = index of the image of point i, or -1 when undefined. Throws
  // NotInjective / BadTable-style errors on malformed data.
  Chart(GroundSet ground, std::vector<int> img);

  const GroundSet& ground() const { return ground_; }
  int points() const { return static_cast<int>(ground_.size()); }
  bool defined(int i) const { return img_[i] >= 0; }
  int apply(int i) const { return img_[i]; }  // -1 when undefined
  const std::string& point_name(int i) const { return ground_[i]; }

  int rank() const;  // |dom|
  std::vector<int> domain() const;
  std::vector<int> image() const;
  std::vector<int> span() const;  // dom u im, sorted
  bool empty() const { return rank() == 0; }

  bool operator==(const Chart&) const = default;

 private:
  GroundSet ground_;
  std::vector<int> img_;
};

enum class ComponentKind { Cycle, Chain };

struct BasicComponent {
  ComponentKind kind = ComponentKind::Cycle;
  // Cycle: k >= 1 points, x_i -> x_{i+1}, last -> first, rotated so the
  // least point comes first. Chain: k+1 >= 2 points in walking order.
  std::vector<int> points;

  bool operator==(const BasicComponent&) const = default;
};

struct CycleChainType {
  std::map<int, int> cycle_counts;  // length -> how many
  std::map<int, int> chain_counts;

  bool operator==(const CycleChainType&) const = default;
};

// Grammar: groups "(p1 .. pk)" for cycles and "[p1 .. pk]" for chains,
// points pairwise distinct; "0" or the empty string is the empty chart.
// Errors: DuplicatePoint, ChainTooShort, BadSyntax.
Chart parse_chart(const std::string& text, const GroundSet& ground);

std::string to_string(const Chart& c);
std::string to_string(const CycleChainType& t);

Chart identity_chart(const GroundSet& g);
// Left-to-right composition: x(ab) = (xa)b. Throws GroundMismatch.
Chart compose(const Chart& a, const Chart& b);
Chart inverse(const Chart& a);

// The unique partition of the span into cycles and chains; sorted with
// cycles first, then chains, each by least point.
std::vector<BasicComponent> decompose(const Chart& a);
// Rebuilds a chart from pairwise completely disjoint components.
Chart join_components(const GroundSet& g, const std::vector<BasicComponent>& comps);

CycleChainType cycle_chain_type(const Chart& a);

bool conjugate_charts(const Chart& a, const Chart& b);

// When the types match, a conjugator with dom = span(a), im = span(b),
// verified against both defining equations before returning.
std::optional<Chart> build_conjugator(const Chart& a, const Chart& b);

// Total bijective conjugator, the above extended by pairing off-span points
// in order; verified before returning.
std::optional<Chart> build_permutation_conjugator(const Chart& a, const Chart& b);

// Conjugacy inside the ideal of charts of rank < r: types equal and
// |span(a)| < r. Throws NotInIdeal when either rank is >= r.
bool conjugate_in_ideal(const Chart& a, const Chart& b, int r);

int max_brute_force_ground();  // 6

// Definitional oracle: every t with t^-1 a t = b and t b t^-1 = a, by
// exhaustive enumeration of the partial injections. Throws GroundTooLarge.
std::vector<Chart> brute_force_conjugators(const Chart& a, const Chart& b);

// All partial injections on the ground set, also capped at 6 points.
std::vector<Chart> all_charts(const GroundSet& g);

}  // namespace invconj

#endif  // INVCONJ_CHART_HPP_
