#include "ordsel/lattice.hpp"

namespace ordsel {

namespace {

Int content_and_den_gcd(const ZMat& m, const Int& den) {
    Int g = den;
    for (const auto& row : m)
        for (const auto& e : row) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
            if (g == 1) return g;
        }
    return g;
}

Lattice normalize(ZMat basis, Int den) {
    Int g = content_and_den_gcd(basis, den);
    if (g > 1) {
        for (auto& row : basis)
            for (auto& e : row) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
        den /= g;
    }
    return Lattice{std::move(basis), std::move(den)};
}

} // namespace

Lattice hnf(const QMat& columns) {
    const std::size_t p = columns.size();
    Int den = 1;
    for (const auto& row : columns)
        for (const auto& e : row) {
            Int d = e.get_den();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        }
    ZMat scaled(p, std::vector<Int>(columns.empty() ? 0 : columns[0].size()));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < columns[i].size(); ++j) {
            Rat v = columns[i][j] * den;
            scaled[i][j] = v.get_num(); // exact: den clears all denominators
        }
    return normalize(hnf_columns(scaled), den);
}

Lattice lattice_identity(std::size_t p) { return Lattice{zmat_identity(p), 1}; }

std::vector<Rat> lattice_column(const Lattice& L, std::size_t j) {
    std::vector<Rat> v(L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i) {
        v[i] = Rat(L.basis[i][j], L.den);
        v[i].canonicalize();
    }
    return v;
}

bool lattice_contains(const Lattice& L, const std::vector<Rat>& v) {
    const std::size_t p = L.dim();
    std::vector<Int> w(p);
    for (std::size_t i = 0; i < p; ++i) {
        Rat s = v[i] * L.den;
        if (s.get_den() != 1) return false;
        w[i] = s.get_num();
    }
    // back substitution against the upper-triangular basis
    for (std::size_t i = p; i-- > 0;) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w[i].get_mpz_t(), L.basis[i][i].get_mpz_t());
        if (r != 0) return false;
        if (q == 0) continue;
        for (std::size_t k = 0; k <= i; ++k) w[k] -= q * L.basis[k][i];
    }
    return true;
}

bool lattice_subset(const Lattice& inner, const Lattice& outer) {
    for (std::size_t j = 0; j < inner.dim(); ++j)
        if (!lattice_contains(outer, lattice_column(inner, j))) return false;
    return true;
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    const std::size_t p = a.dim();
    QMat cols(p, std::vector<Rat>(2 * p));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            cols[i][j] = Rat(a.basis[i][j], a.den);
            cols[i][j].canonicalize();
            cols[i][p + j] = Rat(b.basis[i][j], b.den);
            cols[i][p + j].canonicalize();
        }
    return hnf(cols);
}

Lattice lattice_dual(const Lattice& L) {
    QMat g = qmat_from_z(L.basis);
    for (auto& row : g)
        for (auto& e : row) e /= L.den;
    // dual basis: inverse transpose
    QMat inv = qmat_inverse(g);
    const std::size_t p = L.dim();
    QMat dual(p, std::vector<Rat>(p));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) dual[i][j] = inv[j][i];
    return hnf(dual);
}

Lattice intersect(const Lattice& a, const Lattice& b) {
    return lattice_dual(lattice_sum(lattice_dual(a), lattice_dual(b)));
}


Rat lattice_covolume(const Lattice& L) {
    Int d = 1;
    for (std::size_t i = 0; i < L.dim(); ++i) d *= L.basis[i][i];
    Int dp;
    mpz_pow_ui(dp.get_mpz_t(), L.den.get_mpz_t(), static_cast<unsigned long>(L.dim()));
    Rat r(d, dp);
    r.canonicalize();
    return r;
}

Int lattice_index(const Lattice& outer, const Lattice& inner) {
    if (!lattice_subset(inner, outer)) throw validation_error("not a sublattice");
    Rat idx = lattice_covolume(inner) / lattice_covolume(outer);
    if (idx.get_den() != 1)
        throw internal_error("sublattice index is not integral");
    return idx.get_num();
}

} // namespace ordsel
