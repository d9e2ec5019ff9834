#include "invconj/bicyclic.hpp"

#include <algorithm>

namespace invconj {

namespace {

void require_nonnegative(BicyclicPair p) {
  if (p.a < 0 || p.b < 0)
    throw Error("BadInput", "bicyclic coordinates must be nonnegative");
}

}  // namespace

std::string to_string(BicyclicPair p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

BicyclicPair b_mul(BicyclicPair p, BicyclicPair q) {
  require_nonnegative(p);
  require_nonnegative(q);
  const std::int64_t m = std::max(p.b, q.a);
  return {p.a - p.b + m, q.b - q.a + m};
}

bool b_conjugate(BicyclicPair p, BicyclicPair q) {
  require_nonnegative(p);
  require_nonnegative(q);
  return p.a - p.b == q.a - q.b;
}

BicyclicPair b_conjugator(BicyclicPair p, BicyclicPair q) {
  if (!b_conjugate(p, q))
    throw Error("NotConjugate",
                to_string(p) + " and " + to_string(q) + " differ");
  const BicyclicPair g{std::min(q.a, q.b), std::min(p.a, p.b)};
  const BicyclicPair gi = g.inverse();
  if (b_mul(b_mul(gi, q), g) != p || b_mul(b_mul(g, p), gi) != q)
    throw Error("InternalCheck", "constructed conjugator failed verification");
  return g;
}

bool b_natural_leq(BicyclicPair p, BicyclicPair q) {
  require_nonnegative(p);
  require_nonnegative(q);
  const bool closed_form = p.a - p.b == q.a - q.b && p.a >= q.a;
  bool by_search = false;
  for (std::int64_t e = 0; e <= p.a + q.a + 1 && !by_search; ++e)
    by_search = b_mul({e, e}, q) == p;
  if (closed_form != by_search)
    throw Error("InternalCheck", "natural order closed form disagrees with search");
  return closed_form;
}

bool b_oracle_conjugate(BicyclicPair p, BicyclicPair q, std::int64_t bound) {
  require_nonnegative(p);
  require_nonnegative(q);
  if (bound < 0) throw Error("BadInput", "oracle bound must be nonnegative");
  for (std::int64_t e = 0; e <= bound; ++e) {
    for (std::int64_t f = 0; f <= bound; ++f) {
      const BicyclicPair g{e, f};
      const BicyclicPair gi = g.inverse();
      if (b_mul(b_mul(gi, p), g) == q && b_mul(b_mul(g, q), gi) == p)
        return true;
    }
  }
  return false;
}

std::int64_t default_oracle_bound(BicyclicPair p, BicyclicPair q) {
  return 2 * std::max({p.a, p.b, q.a, q.b}) + 2;
}

StabilityWitnessReport b_stability_witness() {
  StabilityWitnessReport r;
  r.higher = {1, 1};
  r.lower = {2, 2};
  r.conjugate = b_conjugate(r.higher, r.lower) &&
                b_oracle_conjugate(r.higher, r.lower,
                                   default_oracle_bound(r.higher, r.lower));
  r.strictly_below = b_natural_leq(r.lower, r.higher) &&
                     !b_natural_leq(r.higher, r.lower);
  r.distinct = !(r.higher == r.lower);
  return r;
}

}  // namespace invconj
