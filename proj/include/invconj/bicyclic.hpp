#ifndef INVCONJ_BICYCLIC_HPP_
#define INVCONJ_BICYCLIC_HPP_

#include <cstdint>
#include <string>

#include "invconj/errors.hpp"

namespace invconj {

// An element (a,b) of the bicyclic monoid: two nonnegative integers.
// (a,b)^-1 = (b,a); idempotent iff a = b; (0,0) is the identity.
struct BicyclicPair {
  std::int64_t a = 0;
  std::int64_t b = 0;

  BicyclicPair inverse() const { return {b, a}; }
  bool idempotent() const { return a == b; }
  bool operator==(const BicyclicPair&) const = default;
};

std::string to_string(BicyclicPair p);

// (a,b)(c,d) = (a - b + max(b,c), d - c + max(b,c)).
BicyclicPair b_mul(BicyclicPair p, BicyclicPair q);

// Conjugate iff a - b = c - d.
bool b_conjugate(BicyclicPair p, BicyclicPair q);

// The witness (x,y) with x = min(c,d), y = min(a,b); both equations
// (a,b) = (y,x)(c,d)(x,y) and (c,d) = (x,y)(a,b)(y,x) are verified before
// returning. Throws NotConjugate.
BicyclicPair b_conjugator(BicyclicPair p, BicyclicPair q);

// Natural partial order: some idempotent (e,e) has (e,e)q = p. Closed form
// (equal differences and p.a >= q.a) cross-checked against the definitional
// search.
bool b_natural_leq(BicyclicPair p, BicyclicPair q);

// Definitional oracle over witnesses (e,f) with 0 <= e,f <= bound.
bool b_oracle_conjugate(BicyclicPair p, BicyclicPair q, std::int64_t bound);

std::int64_t default_oracle_bound(BicyclicPair p, BicyclicPair q);

struct StabilityWitnessReport {
  BicyclicPair higher;  // (1,1)
  BicyclicPair lower;   // (2,2), strictly below higher
  bool conjugate = false;
  bool strictly_below = false;
  bool distinct = false;
};

// The pair (1,1) ~ (2,2) with (2,2) < (1,1), proved by evaluation: the
// bicyclic monoid is not stable.
StabilityWitnessReport b_stability_witness();

}  // namespace invconj

#endif  // INVCONJ_BICYCLIC_HPP_
