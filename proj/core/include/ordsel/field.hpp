#ifndef ORDSEL_FIELD_HPP
#define ORDSEL_FIELD_HPP

#include <optional>
#include <vector>

#include "ordsel/arith.hpp"
#include "ordsel/lattice.hpp"
#include "ordsel/polynomial.hpp"

namespace ordsel {

// L = Q[x]/(f) of prime degree p, with f monic irreducible over Z.
// Immutable after construction.
struct NumField {
    unsigned degree = 0;
    ZPoly min_poly;
    Int poly_disc;
    // basis of the maximal order O_L in power-basis coordinates, when known
    std::optional<Lattice> integral_basis;

    bool operator==(const NumField& o) const { return min_poly == o.min_poly; }
};

// Validates monic / prime degree / irreducible (distinct errors), computes
// the discriminant by resultant.
NumField make_field(const ZPoly& f);
// Same, with a user-supplied maximal-order basis (columns, power-basis
// coordinates). The basis is verified: full rank, contains 1 and theta,
// multiplicatively closed, discriminant quotient a perfect square.
NumField make_field(const ZPoly& f, const QMat& integral_basis_columns);

// Z[theta] when disc(f) is squarefree, else the verified supplied basis;
// otherwise a validation error (no general maximal-order algorithm here).
Lattice maximal_order(const NumField& L);

// An element in the power basis 1, theta, ..., theta^{p-1}.
struct FieldElem {
    std::vector<Rat> coords;
    bool operator==(const FieldElem&) const = default;
};

FieldElem elem_from_coords(const NumField& L, std::vector<Rat> coords);
FieldElem elem_one(const NumField& L);
FieldElem elem_theta(const NumField& L);
FieldElem elem_mul(const NumField& L, const FieldElem& a, const FieldElem& b);

// sigma(theta) = g(theta) for a generator sigma of Gal(L/Q)
struct AutMap {
    QPoly image_poly;
};

// Exact check that g defines an order-p automorphism of L: f(g) = 0 mod f,
// g != x, and the p-fold composition returns x.
bool verify_automorphism(const NumField& L, const QPoly& g);

// For p = 2 the conjugation map directly; for odd p a numeric root-matching
// search whose candidates are verified exactly (numerics only suggest).
// Returns absent only on a certificate of non-normality (non-square
// discriminant or a mixed factorization pattern at a good prime); throws
// internal_error("automorphism search inconclusive") if precision runs out.
std::optional<AutMap> find_automorphism(const NumField& L);

bool is_galois(const NumField& L);

// matrix of sigma as a Q-linear map in the power basis (columns = images
// of basis vectors)
QMat automorphism_matrix(const NumField& L, const AutMap& sigma);

struct SplitFactor {
    unsigned residue_degree = 0;
    unsigned ram_index = 0;
    auto operator<=>(const SplitFactor&) const = default;
};

// Decomposition shape of a rational prime in L.
struct SplitShape {
    std::vector<SplitFactor> factors; // sorted
    bool nonsplit() const { return factors.size() == 1; }
};

// Shape read off f mod p. Requires p coprime to the index [O_L : Z[theta]],
// certified by p^2 not dividing disc(f), by a supplied integral basis with
// index coprime to p, or by Dedekind's criterion at p; otherwise throws
// validation_error("index divisor at p: unsupported input").
SplitShape splitting_type(const NumField& L, const Int& p);

} // namespace ordsel

#endif
