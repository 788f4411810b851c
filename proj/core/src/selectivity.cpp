#include "ordsel/selectivity.hpp"

#include <algorithm>

namespace ordsel {

namespace {

// splitting behaviour of a place of Q in Q(sqrt(d)), d squarefree != 0, 1
enum class QuadSplit { split, inert, ramified };

QuadSplit quadratic_split(const Int& d, const Place& v) {
    if (!v.is_finite()) {
        // the real place: two real embeddings iff d > 0
        return d > 0 ? QuadSplit::split : QuadSplit::inert;
    }
    const Int& p = v.prime();
    if (p == 2) {
        Int m;
        mpz_mod_ui(m.get_mpz_t(), d.get_mpz_t(), 8);
        if (m == 1) return QuadSplit::split;
        if (m == 5) return QuadSplit::inert;
        return QuadSplit::ramified; // d even or d = 3 mod 4
    }
    if (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) return QuadSplit::ramified;
    return kronecker(d, p) == 1 ? QuadSplit::split : QuadSplit::inert;
}

std::set<Int> finite_ramified_of(const QuatAlg& A) {
    std::set<Int> out;
    for (const Place& v : ramified_set(A))
        if (v.is_finite()) out.insert(v.prime());
    return out;
}

std::string join_primes(const std::set<Int>& s) {
    if (s.empty()) return "{}";
    std::string out = "{";
    bool first = true;
    for (const auto& p : s) {
        if (!first) out += ", ";
        out += p.get_str();
        first = false;
    }
    return out + "}";
}

} // namespace

CsaSpec CsaSpec::quaternionic(const QuatAlg& A) {
    CsaSpec s;
    s.degree = 2;
    s.quaternion = A;
    return s;
}

CsaSpec CsaSpec::odd_degree(unsigned p, const std::set<Int>& finite_ramified) {
    if (p == 2 || !is_prime(Int(p)))
        throw validation_error("odd-degree algebra needs an odd prime degree");
    if (finite_ramified.size() == 1)
        throw validation_error("invalid ramification set (singleton)");
    for (const auto& q : finite_ramified)
        if (!is_prime(q)) throw validation_error("ramified set entry is not prime: " + q.get_str());
    CsaSpec s;
    s.degree = p;
    s.finite_ramified = finite_ramified;
    return s;
}

bool embeds_quadratic(const Int& d, const QuatAlg& A) {
    if (d == 0 || d == 1) throw validation_error("d defines no quadratic field");
    if (squarefree_part(d) != d) throw validation_error("embeds_quadratic expects squarefree d");
    for (const Place& v : ramified_set(A))
        if (quadratic_split(d, v) == QuadSplit::split) return false;
    return true;
}

Verdict decide_quadratic(const Int& d0, const QuatAlg& A) {
    if (d0 == 0) throw validation_error("d defines no quadratic field");
    Int d = squarefree_part(d0);
    if (d == 1) throw validation_error("d defines no quadratic field");

    for (const Place& v : ramified_set(A)) {
        if (quadratic_split(d, v) == QuadSplit::split)
            throw validation_error("L does not embed in A: place " + v.str() +
                                   " splits in Q(sqrt(" + d.get_str() + "))");
    }

    std::set<Int> T = finite_ramified_of(QuatAlg::symbol(Int(-1), d));
    std::set<Int> S = finite_ramified_of(A);

    Verdict v;
    std::set<Int> all = T;
    all.insert(S.begin(), S.end());
    for (const auto& p : all) {
        bool inT = T.count(p) > 0, inS = S.count(p) > 0;
        std::string finding;
        if (inT && inS)
            finding = "ramified in A and in (-1," + d.get_str() + "): match";
        else if (inS)
            finding = "ramified in A but not in (-1," + d.get_str() + "): mismatch";
        else
            finding = "ramified in (-1," + d.get_str() + ") but not in A: mismatch";
        v.trace.push_back(TraceEntry{Place::finite(p), finding});
    }
    v.selective = (S == T);
    v.proportion = v.selective ? Rat(1, 2) : Rat(1);
    v.trace.push_back(TraceEntry{std::nullopt,
                                 "finite ramification of (-1," + d.get_str() + ") = " + join_primes(T) +
                                     ", of A = " + join_primes(S) +
                                     (v.selective ? ": equal" : ": different")});
    return v;
}

Verdict decide_odd(const NumField& L, const OrderLat& H, const std::set<Int>& S) {
    if (L.degree == 2)
        throw validation_error("decide_odd requires odd prime degree");
    CsaSpec::odd_degree(L.degree, S); // validates S
    if (!(H.field == L)) throw validation_error("order does not live in the given field");

    // embedding requirement: every ramified place must be non-split in L
    for (const auto& p : S) {
        SplitShape shape = splitting_type(L, p);
        if (!shape.nonsplit())
            throw validation_error("place " + p.get_str() + " splits in L: no embedding");
    }

    Verdict v;
    std::optional<AutMap> sigma = find_automorphism(L);
    if (!sigma) {
        v.selective = false;
        v.proportion = 1;
        v.trace.push_back(TraceEntry{std::nullopt, "not Galois"});
        return v;
    }

    bool all_asym = true;
    for (const auto& p : S) {
        bool asym = asymmetric_at(H, *sigma, p);
        all_asym = all_asym && asym;
        v.trace.push_back(TraceEntry{Place::finite(p),
                                     (asym ? "asymmetric at " : "symmetric at ") + p.get_str()});
    }
    if (S.empty())
        v.trace.push_back(TraceEntry{std::nullopt, "Galois; no finite ramification to test"});

    v.selective = all_asym;
    v.proportion = v.selective ? Rat(1, static_cast<unsigned long>(L.degree)) : Rat(1);
    return v;
}

} // namespace ordsel
