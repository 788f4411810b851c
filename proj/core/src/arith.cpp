#include "ordsel/arith.hpp"

#include <algorithm>
#include <map>

namespace ordsel {

namespace {

const Int kTwo64 = Int(1) << 64;

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Exact below 2^64 with this base set.
bool miller_rabin_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) { uint64_t t = a % b; a = b; b = t; }
    return a;
}

// Brent's variant of Pollard rho; n odd composite, no factor below 10^6.
uint64_t pollard_brent_u64(uint64_t n) {
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        uint64_t q = 1;
        int m = 128;
        uint64_t ys = y;
        for (uint64_t r = 1; d == 1; r <<= 1) {
            x = y;
            for (uint64_t i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
            for (uint64_t k = 0; k < r && d == 1; k += m) {
                ys = y;
                uint64_t lim = std::min<uint64_t>(m, r - k);
                for (uint64_t i = 0; i < lim; ++i) {
                    y = (mulmod_u64(y, y, n) + c) % n;
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                d = gcd_u64(q, n);
            }
        }
        if (d == n) {
            // backtrack one step at a time
            do {
                ys = (mulmod_u64(ys, ys, n) + c) % n;
                d = gcd_u64(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_u64_into(uint64_t n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (miller_rabin_u64(n)) {
        out[Int(static_cast<unsigned long>(n))] += 1;
        return;
    }
    uint64_t d = pollard_brent_u64(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

} // namespace

Place Place::finite(const Int& p) {
    if (!is_prime(p)) throw validation_error("not a prime: " + p.get_str());
    return Place(true, p);
}

Place Place::infinite() { return Place(false, Int(0)); }

const Int& Place::prime() const {
    if (!finite_) throw validation_error("the infinite place has no prime");
    return prime_;
}

std::string Place::str() const { return finite_ ? prime_.get_str() : "inf"; }

Int Factorization::reassemble() const {
    Int n = sign;
    for (const auto& [p, e] : factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        n *= pe;
    }
    return n;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n >= kTwo64)
        throw validation_error("primality check limited to inputs below 2^64");
    return miller_rabin_u64(n.get_ui());
}

unsigned valuation(const Int& n, const Int& p) {
    if (n == 0) throw validation_error("valuation of zero undefined");
    if (!is_prime(p)) throw validation_error("valuation requires a prime modulus");
    unsigned e = 0;
    Int m = abs(n), q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        m = q;
        ++e;
    }
    return e;
}

Factorization factor(const Int& n) { return factor(n, kTwo64); }

Factorization factor(const Int& n, const Int& limit) {
    if (n == 0) throw validation_error("cannot factor zero");
    if (limit > kTwo64)
        throw validation_error("factorization limit cannot exceed 2^64");
    Int m = abs(n);
    if (m > limit) throw validation_error(kFactorLimitMsg);

    Factorization out;
    out.sign = sgn(n);

    std::map<Int, unsigned> fs;
    // trial division below 10^6
    for (uint64_t d = 2; d < 1000000 && Int(d) * d <= m; d = (d == 2 ? 3 : d + 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
            fs[Int(static_cast<unsigned long>(d))] += 1;
        }
    }
    if (m > 1) {
        // cofactor fits in 64 bits: any power of two was removed above
        factor_u64_into(m.get_ui(), fs);
    }
    out.factors.assign(fs.begin(), fs.end());
    return out;
}

int kronecker(const Int& a, const Int& n) {
    if (n == 0) throw validation_error("kronecker symbol undefined for n = 0");
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

Int squarefree_part(const Int& d) {
    if (d == 0) throw validation_error("squarefree part of zero undefined");
    Factorization f = factor(d);
    Int out = f.sign;
    for (const auto& [p, e] : f.factors)
        if (e % 2 == 1) out *= p;
    return out;
}

} // namespace ordsel
