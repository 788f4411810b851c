#include "ordsel/order.hpp"

namespace ordsel {

OrderLat make_order(const NumField& L, const QMat& basis_columns) {
    const unsigned p = L.degree;
    Lattice lat = hnf(basis_columns); // throws "not full rank"
    if (lat.dim() != p) throw validation_error("order basis has wrong dimension");

    std::vector<Rat> one(p, Rat(0));
    one[0] = 1;
    if (!lattice_contains(lat, one)) throw validation_error("does not contain 1");

    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i; j < p; ++j) {
            FieldElem prod = elem_mul(L, FieldElem{lattice_column(lat, i)},
                                      FieldElem{lattice_column(lat, j)});
            if (!lattice_contains(lat, prod.coords))
                throw validation_error("not multiplicatively closed");
        }
    return OrderLat{L, std::move(lat)};
}

OrderLat conductor_order(const NumField& L, const Int& c) {
    if (c <= 0) throw validation_error("conductor must be positive");
    Lattice OL = maximal_order(L);
    const unsigned p = L.degree;
    QMat cols(p, std::vector<Rat>(p + 1, Rat(0)));
    cols[0][0] = 1; // the unit
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            Rat e(OL.basis[i][j] * c, OL.den);
            e.canonicalize();
            cols[i][j + 1] = e;
        }
    return make_order(L, cols);
}

OrderLat apply_aut(const OrderLat& H, const AutMap& sigma) {
    if (!verify_automorphism(H.field, sigma.image_poly))
        throw validation_error("map is not an automorphism of this field");
    QMat S = automorphism_matrix(H.field, sigma);
    const unsigned p = H.field.degree;
    QMat cols(p, std::vector<Rat>(p));
    for (std::size_t j = 0; j < p; ++j) {
        std::vector<Rat> img = qmat_apply(S, lattice_column(H.lat, j));
        for (std::size_t i = 0; i < p; ++i) cols[i][j] = img[i];
    }
    return OrderLat{H.field, hnf(cols)};
}

Int order_index(const OrderLat& H, const Lattice& M) {
    return lattice_index(H.lat, M);
}

bool asymmetric_at(const OrderLat& H, const AutMap& sigma, const Int& p) {
    if (!is_prime(p)) throw validation_error("asymmetry test requires a prime");
    OrderLat img = apply_aut(H, sigma);
    Lattice meet = intersect(H.lat, img.lat);
    Int idx = order_index(H, meet);
    return mpz_divisible_p(idx.get_mpz_t(), p.get_mpz_t()) != 0;
}

} // namespace ordsel
