#include "ordsel/hilbert.hpp"

#include <algorithm>

namespace ordsel {

namespace {

// (u-1)/2 mod 2 for odd u
int eps2(const Int& u) {
    Int t = (u - 1) / 2;
    return mpz_odd_p(t.get_mpz_t()) ? 1 : 0;
}

// (u^2-1)/8 mod 2 for odd u
int omega2(const Int& u) {
    Int t = (u * u - 1) / 8;
    return mpz_odd_p(t.get_mpz_t()) ? 1 : 0;
}

// the places where (a,b)_v can possibly be -1: 2, infinity, odd p | ab
std::vector<Place> probe_places(const Int& a, const Int& b) {
    std::set<Int> primes{Int(2)};
    for (const auto& [p, e] : factor(a).factors) primes.insert(p);
    for (const auto& [p, e] : factor(b).factors) primes.insert(p);
    std::vector<Place> out;
    for (const auto& p : primes) out.push_back(Place::finite(p));
    out.push_back(Place::infinite());
    return out;
}

} // namespace

QuatAlg QuatAlg::symbol(const Int& a, const Int& b) {
    if (a == 0 || b == 0) throw validation_error("quaternion symbol entries must be nonzero");
    QuatAlg q;
    q.symbol_form_ = true;
    q.a_ = a;
    q.b_ = b;
    return q;
}

QuatAlg QuatAlg::ramset(const std::set<Int>& finite_primes, bool infinite_ramified) {
    for (const auto& p : finite_primes)
        if (!is_prime(p)) throw validation_error("ramification set entry is not prime: " + p.get_str());
    std::size_t total = finite_primes.size() + (infinite_ramified ? 1 : 0);
    if (total % 2 != 0)
        throw validation_error("ramification set must have even total cardinality");
    QuatAlg q;
    q.symbol_form_ = false;
    q.finite_primes_ = finite_primes;
    q.infinite_ramified_ = infinite_ramified;
    return q;
}

int hilbert_symbol(const Int& a, const Int& b, const Place& v) {
    if (a == 0 || b == 0) throw validation_error("hilbert symbol arguments must be nonzero");
    if (!v.is_finite()) return (a < 0 && b < 0) ? -1 : 1;

    const Int& p = v.prime();
    unsigned alpha = valuation(a, p);
    unsigned beta = valuation(b, p);
    Int pa, pb;
    mpz_pow_ui(pa.get_mpz_t(), p.get_mpz_t(), alpha);
    mpz_pow_ui(pb.get_mpz_t(), p.get_mpz_t(), beta);
    Int u = a / pa; // unit part
    Int w = b / pb;

    if (p == 2) {
        int e = eps2(u) * eps2(w) + static_cast<int>(alpha) * omega2(w) +
                static_cast<int>(beta) * omega2(u);
        return (e % 2 == 0) ? 1 : -1;
    }

    int s = 0;
    if ((alpha & 1u) && (beta & 1u) && mpz_odd_p(Int((p - 1) / 2).get_mpz_t())) s = 1;
    int result = (s == 0) ? 1 : -1;
    if (beta & 1u) result *= kronecker(u, p);
    if (alpha & 1u) result *= kronecker(w, p);
    return result;
}

std::vector<Place> ramified_set(const QuatAlg& A) {
    std::vector<Place> out;
    if (!A.is_symbol()) {
        for (const auto& p : A.finite_primes()) out.push_back(Place::finite(p));
        if (A.infinite_ramified()) out.push_back(Place::infinite());
        return out;
    }
    for (const Place& v : probe_places(A.a(), A.b()))
        if (hilbert_symbol(A.a(), A.b(), v) == -1) out.push_back(v);
    std::sort(out.begin(), out.end());
    if (out.size() % 2 != 0)
        throw internal_error("hilbert reciprocity violated: odd ramification set");
    return out;
}

bool verify_reciprocity(const Int& a, const Int& b) {
    int prod = 1;
    for (const Place& v : probe_places(a, b)) prod *= hilbert_symbol(a, b, v);
    return prod == 1;
}

} // namespace ordsel
