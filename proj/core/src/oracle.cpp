#include "ordsel/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ordsel/polynomial.hpp"

namespace ordsel::oracle {

namespace {

// Insert-only open-addressing set for 64-bit keys (0 reserved as empty).
class FlatSet {
  public:
    explicit FlatSet(std::size_t capacity_pow2) : mask_(capacity_pow2 - 1), slots_(capacity_pow2, 0) {}

    bool insert(uint64_t key) { // returns false when the table is full
        if (count_ * 4 >= slots_.size() * 3) return false;
        uint64_t k = key + 1; // shift so 0 stays the empty marker
        std::size_t i = hash(k) & mask_;
        while (slots_[i] != 0) {
            if (slots_[i] == k) return true;
            i = (i + 1) & mask_;
        }
        slots_[i] = k;
        ++count_;
        return true;
    }

    bool contains(uint64_t key) const {
        uint64_t k = key + 1;
        std::size_t i = hash(k) & mask_;
        while (slots_[i] != 0) {
            if (slots_[i] == k) return true;
            i = (i + 1) & mask_;
        }
        return false;
    }

  private:
    static uint64_t hash(uint64_t x) {
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return x;
    }
    std::size_t mask_;
    std::size_t count_ = 0;
    std::vector<uint64_t> slots_;
};

// Walks c * t^2 mod m incrementally: the value steps by c*(2t+1), which
// itself steps by 2c.
struct SquareWalk {
    uint64_t m, val, step, twoc;
    SquareWalk(uint64_t c, uint64_t mm) : m(mm), val(0), step(c % mm), twoc((2 * (c % mm)) % mm) {}
    uint64_t next() { // returns c*t^2 for t = 0, 1, 2, ...
        uint64_t out = val;
        val += step;
        if (val >= m) val -= m;
        step += twoc;
        if (step >= m) step -= m;
        return out;
    }
};

// Does z^2 = a x^2 + b y^2 (mod m) have a solution with a unit coordinate?
// Any primitive solution has x or y a unit (if both were divisible by p the
// right side would be 0 mod p^2, forcing p | z), and scaling by the inverse
// unit pins that coordinate to 1. So it is enough to decide
//   y = 1:  z^2 = a x^2 + b   and   x = 1:  z^2 = a + b y^2
// by exhaustion over t and m - t (same squares), meeting z against x resp. y.
bool level_solvable_bitset(uint64_t au, uint64_t bu, uint64_t m) {
    std::vector<bool> sq(m, false);
    SquareWalk wz(1, m);
    for (uint64_t t = 0; t <= m / 2; ++t) sq[wz.next()] = true;
    SquareWalk wx(au, m), wy(bu, m);
    for (uint64_t t = 0; t <= m / 2; ++t) {
        if (sq[(wx.next() + bu) % m]) return true; // y = 1
        if (sq[(wy.next() + au) % m]) return true; // x = 1
    }
    return false;
}

// Online meet-in-the-middle for large moduli: grow {z^2}, {a x^2 + b} and
// {a + b y^2} together and stop at the first collision. Falls back to the
// exhaustive bitset when the tables fill without a hit.
int level_solvable_online(uint64_t au, uint64_t bu, uint64_t m) {
    // expected collision time is ~sqrt(m) <= 50k for m < 2^31; 2^18 slots
    // leave a generous margin before the exhaustive fallback
    const std::size_t slots = std::size_t(1) << 18;
    FlatSet zs(slots), xs(slots), ys(slots);
    SquareWalk wz(1, m), wx(au, m), wy(bu, m);
    for (uint64_t t = 0; t <= m / 2; ++t) {
        uint64_t z2 = wz.next();
        uint64_t xv = (wx.next() + bu) % m; // a x^2 + b
        uint64_t yv = (wy.next() + au) % m; // a + b y^2
        if (z2 == xv || z2 == yv) return 1;
        if (xs.contains(z2) || ys.contains(z2)) return 1;
        if (zs.contains(xv) || zs.contains(yv)) return 1;
        if (!zs.insert(z2) || !xs.insert(xv) || !ys.insert(yv)) return -1; // tables full
    }
    return 0; // exhausted: no solution
}

} // namespace

int hilbert_bruteforce(const Int& a, const Int& b, const Int& p, unsigned k) {
    if (a == 0 || b == 0) throw validation_error("hilbert oracle arguments must be nonzero");
    if (!is_prime(p)) throw validation_error("hilbert oracle modulus must be prime");
    unsigned need = 3 + 2 * std::max(valuation(a, p), valuation(b, p));
    if (k < need)
        throw validation_error("precision below the lifting threshold: need k >= " +
                               std::to_string(need));

    Int mk;
    mpz_pow_ui(mk.get_mpz_t(), p.get_mpz_t(), k);
    if (mk > Int(1) << 31) throw validation_error("oracle modulus too large for exhaustion");

    // Iterative deepening over p^j: a primitive solution mod p^j reduces to
    // a primitive one mod p^{j-1}, so an unsolvable level settles -1 early;
    // the verdict +1 is only pronounced at the full precision p^k.
    for (unsigned j = 1; j <= k; ++j) {
        Int mj;
        mpz_pow_ui(mj.get_mpz_t(), p.get_mpz_t(), j);
        const uint64_t m = mj.get_ui();
        Int am, bm;
        mpz_mod(am.get_mpz_t(), a.get_mpz_t(), mj.get_mpz_t());
        mpz_mod(bm.get_mpz_t(), b.get_mpz_t(), mj.get_mpz_t());
        const uint64_t au = am.get_ui(), bu = bm.get_ui();

        bool solvable;
        if (m <= (uint64_t(1) << 22)) {
            solvable = level_solvable_bitset(au, bu, m);
        } else {
            int r = level_solvable_online(au, bu, m);
            solvable = (r == -1) ? level_solvable_bitset(au, bu, m) : (r == 1);
        }
        if (!solvable) return -1;
    }
    return 1;
}

bool closure_bruteforce(const QMat& basis_columns, const NumField& L) {
    const std::size_t p = L.degree;
    if (basis_columns.size() != p) throw validation_error("oracle basis has wrong dimension");

    // membership by plain Gaussian elimination: solve B x = v, check x in Z^p
    auto member = [&](const std::vector<Rat>& v) {
        QMat aug(p, std::vector<Rat>(p + 1));
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = 0; j < p; ++j) aug[i][j] = basis_columns[i][j];
            aug[i][p] = v[i];
        }
        for (std::size_t col = 0, row = 0; col < p && row < p; ++col, ++row) {
            std::size_t piv = row;
            while (piv < p && aug[piv][col] == 0) ++piv;
            if (piv == p) throw validation_error("oracle basis not full rank");
            std::swap(aug[piv], aug[row]);
            for (std::size_t i = 0; i < p; ++i) {
                if (i == row || aug[i][col] == 0) continue;
                Rat f = aug[i][col] / aug[row][col];
                for (std::size_t j = col; j <= p; ++j) aug[i][j] -= f * aug[row][j];
            }
        }
        for (std::size_t i = 0; i < p; ++i) {
            Rat x = aug[i][p] / aug[i][i];
            if (x.get_den() != 1) return false;
        }
        return true;
    };

    for (std::size_t i = 0; i < p; ++i) {
        std::vector<Rat> u(p), w(p);
        for (std::size_t r = 0; r < p; ++r) u[r] = basis_columns[r][i];
        for (std::size_t j = i; j < p; ++j) {
            for (std::size_t r = 0; r < p; ++r) w[r] = basis_columns[r][j];
            // multiply u * w mod f with plain polynomial arithmetic
            QPoly prod = q_mod(q_mul(u, w), L.min_poly);
            prod.resize(p, Rat(0));
            if (!member(prod)) return false;
        }
    }
    return true;
}

Int snf_index(const ZMat& m0) {
    const std::size_t n = m0.size();
    ZMat m = m0;
    for (const auto& row : m)
        if (row.size() != n) throw validation_error("snf oracle needs a square matrix");

    Int result = 1;
    for (std::size_t s = 0; s < n; ++s) {
        for (;;) {
            // locate the minimal nonzero entry of the trailing block
            std::size_t bi = s, bj = s;
            bool found = false;
            for (std::size_t i = s; i < n; ++i)
                for (std::size_t j = s; j < n; ++j) {
                    if (m[i][j] == 0) continue;
                    if (!found || abs(m[i][j]) < abs(m[bi][bj])) {
                        bi = i;
                        bj = j;
                        found = true;
                    }
                }
            if (!found) throw validation_error("matrix is singular");
            std::swap(m[s], m[bi]);
            for (std::size_t i = s; i < n; ++i) std::swap(m[i][s], m[i][bj]);

            bool clean = true;
            for (std::size_t i = s + 1; i < n; ++i) {
                if (m[i][s] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][s].get_mpz_t(), m[s][s].get_mpz_t());
                for (std::size_t j = s; j < n; ++j) m[i][j] -= q * m[s][j];
                if (m[i][s] != 0) clean = false;
            }
            for (std::size_t j = s + 1; j < n; ++j) {
                if (m[s][j] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m[s][j].get_mpz_t(), m[s][s].get_mpz_t());
                for (std::size_t i = s; i < n; ++i) m[i][j] -= q * m[i][s];
                if (m[s][j] != 0) clean = false;
            }
            if (clean && m[s][s] != 0) break;
        }
        if (m[s][s] < 0)
            for (std::size_t j = s; j < n; ++j) m[s][j] = -m[s][j];
    }

    // polish the diagonal into elementary divisors (d_i | d_{i+1})
    std::vector<Int> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = m[i][i];
    for (std::size_t s = 0; s + 1 < n; ++s)
        for (std::size_t t = s + 1; t < n; ++t) {
            Int g;
            mpz_gcd(g.get_mpz_t(), d[s].get_mpz_t(), d[t].get_mpz_t());
            Int l = d[s] / g * d[t];
            d[s] = g;
            d[t] = l;
        }
    for (std::size_t i = 0; i < n; ++i) result *= d[i];
    return abs(result);
}

} // namespace ordsel::oracle
