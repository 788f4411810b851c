#ifndef ORDSEL_SELECTIVITY_HPP
#define ORDSEL_SELECTIVITY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ordsel/field.hpp"
#include "ordsel/hilbert.hpp"
#include "ordsel/order.hpp"

namespace ordsel {

// A central simple algebra of prime degree p over Q. For p = 2 a quaternion
// algebra; for odd p only the set of finitely ramified primes matters (the
// local invariants k/p never change the verdict), and a real place cannot
// ramify.
struct CsaSpec {
    unsigned degree = 2;
    std::optional<QuatAlg> quaternion;  // degree 2
    std::set<Int> finite_ramified;      // odd degree

    static CsaSpec quaternionic(const QuatAlg& A);
    static CsaSpec odd_degree(unsigned p, const std::set<Int>& finite_ramified);
};

struct TraceEntry {
    std::optional<Place> place; // absent for global findings
    std::string finding;
};

// F_M in {L, K}: L means the order is selective for some genus of full-rank
// orders (proportion of spinor genera representing it is 1/p), K means never
// selective (proportion 1).
struct Verdict {
    bool selective = false; // f_m = L
    Rat proportion = 1;     // 1 or 1/p, exact
    std::vector<TraceEntry> trace;

    std::string f_m() const { return selective ? "L" : "K"; }
};

// Can Q(sqrt(d)) be a maximal subfield of A? True iff no ramified place of A
// splits in Q(sqrt(d)). d must be squarefree, not 0 or 1.
bool embeds_quadratic(const Int& d, const QuatAlg& A);

// Quaternion case: selective iff A ramifies at exactly the same finite
// primes as the symbol algebra (-1, d). Independent of the order in L, so
// none is taken. d is canonicalized through its squarefree part.
Verdict decide_quadratic(const Int& d, const QuatAlg& A);

// Odd prime degree: selective iff L/Q is Galois and H is asymmetric at every
// prime of S. Every member of S must be non-split in L (else L does not
// embed), and |S| = 1 is impossible for a CSA.
Verdict decide_odd(const NumField& L, const OrderLat& H, const std::set<Int>& S);

} // namespace ordsel

#endif
