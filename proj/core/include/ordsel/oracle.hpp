#ifndef ORDSEL_ORACLE_HPP
#define ORDSEL_ORACLE_HPP

#include "ordsel/field.hpp"
#include "ordsel/matrix.hpp"

// Slow, independent reference implementations for the test suites. Nothing
// here shares a code path with the production routines it cross-checks, and
// nothing here is reachable from the CLI.

namespace ordsel::oracle {

// +1 iff z^2 = a x^2 + b y^2 mod p^k has a solution with not all of x, y, z
// divisible by p, found by exhaustive search. k must be at least
// 3 + 2 max(v_p(a), v_p(b)) so that a primitive solution mod p^k lifts.
int hilbert_bruteforce(const Int& a, const Int& b, const Int& p, unsigned k);

// all pairwise basis products land back in the lattice; membership is by
// dense Gaussian elimination, not HNF
bool closure_bruteforce(const QMat& basis_columns, const NumField& L);

// |det| as the product of the Smith normal form diagonal
Int snf_index(const ZMat& m);

} // namespace ordsel::oracle

#endif
