#ifndef ORDSEL_ARITH_HPP
#define ORDSEL_ARITH_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ordsel/errors.hpp"

namespace ordsel {

using Int = mpz_class;
using Rat = mpq_class;

// A place of Q: a finite prime or the one real place.
class Place {
  public:
    static Place finite(const Int& p);
    static Place infinite();

    bool is_finite() const { return finite_; }
    const Int& prime() const; // only valid for finite places

    std::string str() const; // "2", "113", "inf"

    friend bool operator==(const Place& a, const Place& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.prime_ == b.prime_);
    }
    // finite places ascending by prime, the infinite place last
    friend bool operator<(const Place& a, const Place& b) {
        if (a.finite_ != b.finite_) return a.finite_;
        return a.finite_ && a.prime_ < b.prime_;
    }

  private:
    Place(bool fin, Int p) : finite_(fin), prime_(std::move(p)) {}
    bool finite_;
    Int prime_;
};

struct Factorization {
    int sign = 1;                                // +1 or -1
    std::vector<std::pair<Int, unsigned>> factors; // (prime, exponent), primes ascending

    Int reassemble() const;
};

// Deterministic primality check (trial division + Miller-Rabin with a base
// set that is exact below 2^64). Inputs >= 2^64 are out of desk scale and
// rejected.
bool is_prime(const Int& n);

// Largest e with p^e | n.  n != 0, p prime.
unsigned valuation(const Int& n, const Int& p);

inline constexpr const char* kFactorLimitMsg = "factorization limit exceeded";

// Exact factorization of n != 0 with |n| <= limit (default 2^64): trial
// division below 10^6, then Brent-cycle Pollard rho on the cofactor.
Factorization factor(const Int& n);
Factorization factor(const Int& n, const Int& limit);

// Kronecker symbol (a|n), n != 0.
int kronecker(const Int& a, const Int& n);

// d divided by its largest square divisor; Q(sqrt(d)) is unchanged.
Int squarefree_part(const Int& d);

} // namespace ordsel

#endif
