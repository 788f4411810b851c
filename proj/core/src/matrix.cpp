#include "ordsel/matrix.hpp"

#include <algorithm>
#include <cstddef>

namespace ordsel {

ZMat zmat_identity(std::size_t n) {
    ZMat m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMat qmat_identity(std::size_t n) {
    QMat m(n, std::vector<Rat>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMat qmat_from_z(const ZMat& z) {
    QMat m(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        m[i].assign(z[i].begin(), z[i].end());
    return m;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
    const std::size_t n = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    QMat out(n, std::vector<Rat>(c, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            Rat s = 0;
            for (std::size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
            out[i][j] = s;
        }
    return out;
}

std::vector<Rat> qmat_apply(const QMat& a, const std::vector<Rat>& v) {
    std::vector<Rat> out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < v.size(); ++j) s += a[i][j] * v[j];
        out[i] = s;
    }
    return out;
}

QMat qmat_inverse(const QMat& m) {
    const std::size_t n = m.size();
    QMat a = m;
    QMat inv = qmat_identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw validation_error("matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}


Int zmat_det(ZMat m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

ZMat hnf_columns(const ZMat& m) {
    const std::size_t p = m.size();
    const std::size_t n = p == 0 ? 0 : m[0].size();
    if (n < p) throw validation_error("not full rank");

    // work with column vectors
    std::vector<std::vector<Int>> cols(n, std::vector<Int>(p));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < n; ++j) cols[j][i] = m[i][j];

    std::vector<std::vector<Int>> basis(p);
    std::vector<bool> used(n, false);

    for (std::size_t ii = p; ii-- > 0;) {
        // gcd-combine all active columns with a nonzero entry in row ii,
        // leaving a single pivot column
        long pivot = -1;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || cols[j][ii] == 0) continue;
            if (pivot < 0) {
                pivot = static_cast<long>(j);
                continue;
            }
            auto& u = cols[pivot];
            auto& v = cols[j];
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                       u[ii].get_mpz_t(), v[ii].get_mpz_t());
            Int cu = u[ii] / g, cv = v[ii] / g;
            for (std::size_t r = 0; r <= ii; ++r) {
                Int nu = s * u[r] + t * v[r];
                Int nv = cv * u[r] - cu * v[r];
                u[r] = nu;
                v[r] = nv;
            }
        }
        if (pivot < 0) throw validation_error("not full rank");
        if (cols[pivot][ii] < 0)
            for (auto& e : cols[pivot]) e = -e;
        basis[ii] = cols[pivot];
        used[pivot] = true;
    }

    // reduce entries right of each pivot into [0, pivot)
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = j; i-- > 0;) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), basis[j][i].get_mpz_t(), basis[i][i].get_mpz_t());
            if (q == 0) continue;
            for (std::size_t r = 0; r <= i; ++r) basis[j][r] -= q * basis[i][r];
        }
    }

    ZMat out(p, std::vector<Int>(p, 0));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) out[i][j] = basis[j][i];
    return out;
}

} // namespace ordsel
