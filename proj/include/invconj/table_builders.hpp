#ifndef INVCONJ_TABLE_BUILDERS_HPP_
#define INVCONJ_TABLE_BUILDERS_HPP_

#include "invconj/cayley.hpp"
#include "invconj/chart.hpp"

namespace invconj {

// The symmetric inverse monoid on {1..n} as a Cayley table; elements are
// named by their cycle-chain decomposition. n <= 6.
CayleyTable symmetric_inverse_table(int n);

// Five-element Brandt semigroup: 2x2 matrix units and zero.
CayleyTable brandt_b2();

// Symmetric group on {1..n}, elements named by one-line notation. n <= 5.
CayleyTable symmetric_group_table(int n);

CayleyTable cyclic_group_table(int n);

// Chain semilattice e0 < e1 < ... under meet (min).
CayleyTable chain_semilattice_table(int n);

// Bottom below two incomparable points; the smallest semilattice without an
// identity.
CayleyTable antichain_bottom_semilattice();

// xy = x. Regular, but the idempotents do not commute: not inverse.
CayleyTable left_zero_table(int n);

CayleyTable direct_product(const CayleyTable& s, const CayleyTable& t);

}  // namespace invconj

#endif  // INVCONJ_TABLE_BUILDERS_HPP_
