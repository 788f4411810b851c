#ifndef ORDSEL_HILBERT_HPP
#define ORDSEL_HILBERT_HPP

#include <set>
#include <vector>

#include "ordsel/arith.hpp"

namespace ordsel {

// A quaternion algebra over Q, given either by a symbol pair (a,b) or by
// its ramification data directly.
class QuatAlg {
  public:
    static QuatAlg symbol(const Int& a, const Int& b);
    // finite primes plus a flag for the real place; total count must be even
    static QuatAlg ramset(const std::set<Int>& finite_primes, bool infinite_ramified);

    bool is_symbol() const { return symbol_form_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const std::set<Int>& finite_primes() const { return finite_primes_; }
    bool infinite_ramified() const { return infinite_ramified_; }

  private:
    QuatAlg() = default;
    bool symbol_form_ = false;
    Int a_, b_;
    std::set<Int> finite_primes_;
    bool infinite_ramified_ = false;
};

// (a,b)_v: +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution over the
// completion at v. Closed-form local formulas; no iteration.
int hilbert_symbol(const Int& a, const Int& b, const Place& v);

// Places where the algebra is a division algebra. Sorted; even cardinality.
std::vector<Place> ramified_set(const QuatAlg& A);

// Product formula self-check over the probed places. Must always come back
// true; callers treat false as a tripwire.
bool verify_reciprocity(const Int& a, const Int& b);

} // namespace ordsel

#endif
