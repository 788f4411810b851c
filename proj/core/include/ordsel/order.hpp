#ifndef ORDSEL_ORDER_HPP
#define ORDSEL_ORDER_HPP

#include "ordsel/field.hpp"
#include "ordsel/lattice.hpp"

namespace ordsel {

// A full-rank order in L: a multiplicatively closed unital lattice, kept in
// power-basis coordinates so fields without a known maximal order still work.
struct OrderLat {
    NumField field;
    Lattice lat;

    bool operator==(const OrderLat& o) const { return field == o.field && lat == o.lat; }
};

// HNF-normalizes and verifies: full rank, contains 1, closed under
// multiplication. Errors: "not full rank", "does not contain 1",
// "not multiplicatively closed".
OrderLat make_order(const NumField& L, const QMat& basis_columns);

// Z + c * O_L. Requires the maximal order (see maximal_order policy).
OrderLat conductor_order(const NumField& L, const Int& c);

// Image lattice sigma(H); always again an order. sigma is re-verified
// against H's field.
OrderLat apply_aut(const OrderLat& H, const AutMap& sigma);

// Module index [H : M] for a sublattice M of H.
Int order_index(const OrderLat& H, const Lattice& M);

// p divides [H : H cap sigma(H)]; since sigma has determinant +-1, this is
// exactly sigma(H_p) != H_p for the p-localization.
bool asymmetric_at(const OrderLat& H, const AutMap& sigma, const Int& p);

} // namespace ordsel

#endif
