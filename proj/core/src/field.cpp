#include "ordsel/field.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>

namespace ordsel {

namespace {

// ---------------------------------------------------------------- helpers

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (degree(a) < 0 || degree(b) < 0) return {};
    ZPoly c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

std::vector<Int> divisors_of(const Int& n, std::size_t cap) {
    Factorization f = factor(n);
    std::vector<Int> ds{Int(1)};
    for (const auto& [p, e] : f.factors) {
        std::size_t old = ds.size();
        if (old * (e + 1) > cap) return {}; // too many to enumerate
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < old; ++i) ds.push_back(ds[i] * pk);
        }
    }
    return ds;
}

// ----------------------------------------------------- irreducibility check

std::vector<std::vector<unsigned>> partitions_of(unsigned n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned rest, unsigned maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (unsigned k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// can `pattern` be split into groups summing to the entries of `target`?
bool pattern_refines(std::vector<unsigned> pattern, const std::vector<unsigned>& target) {
    std::sort(pattern.rbegin(), pattern.rend());
    std::vector<unsigned> room = target;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == pattern.size()) return true;
        for (auto& r : room) {
            if (r < pattern[i]) continue;
            r -= pattern[i];
            if (self(self, i + 1)) {
                r += pattern[i];
                return true;
            }
            r += pattern[i];
        }
        return false;
    };
    return rec(rec, 0);
}

QPoly lagrange_interpolate(const std::vector<Int>& xs, const std::vector<Rat>& ys) {
    QPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        QPoly num{Rat(1)};
        Rat den = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            num = q_mul(num, QPoly{Rat(-xs[j]), Rat(1)});
            den *= Rat(xs[i] - xs[j]);
        }
        for (auto& c : num) c *= ys[i] / den;
        acc = q_add(acc, num);
    }
    return acc;
}

bool divides_exactly(const QPoly& g, const ZPoly& f) {
    return degree(q_divmod(q_from_z(f), g).second) < 0;
}

// Kronecker factor search: complete but slow; only reached when the modular
// degree patterns fail to certify.
bool kronecker_finds_factor(const ZPoly& f) {
    const unsigned p = static_cast<unsigned>(degree(f));
    const unsigned maxd = p / 2;
    std::vector<Int> xs;
    std::vector<Int> vals;
    for (long t = 0; xs.size() < maxd + 1; t = (t > 0 ? -t : -t + 1)) {
        Int v = z_eval(f, Int(t));
        if (v == 0) return true; // rational root
        xs.push_back(Int(t));
        vals.push_back(v);
    }
    std::vector<std::vector<Int>> divs(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        divs[i] = divisors_of(vals[i], 4096);
        if (divs[i].empty())
            throw validation_error("irreducibility check infeasible at desk scale");
        std::size_t n = divs[i].size();
        if (i > 0) // both signs, except the first point (g and -g divide together)
            for (std::size_t k = 0; k < n; ++k) divs[i].push_back(-divs[i][k]);
    }
    std::vector<std::size_t> pick(vals.size(), 0);
    for (;;) {
        std::vector<Rat> ys(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i) ys[i] = Rat(divs[i][pick[i]]);
        QPoly g = lagrange_interpolate(xs, ys);
        int dg = degree(g);
        if (dg >= 1 && dg < static_cast<int>(p)) {
            bool integral = true;
            for (const auto& c : g)
                if (c.get_den() != 1) { integral = false; break; }
            if (integral && divides_exactly(g, f)) return true;
        }
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == divs[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return false;
}

const char* kReducibleMsg = "polynomial is reducible over Q";

void check_irreducible(const ZPoly& f) {
    const unsigned p = static_cast<unsigned>(degree(f));
    if (f[0] == 0) throw validation_error(kReducibleMsg);

    // rational root test (any factorization of prime degree <= 3 has one)
    std::vector<Int> ds;
    try {
        ds = divisors_of(f[0], 4096);
    } catch (const validation_error&) {
        // constant term beyond the factoring limit: the modular patterns
        // below still decide
    }
    for (const auto& d : ds) {
        if (z_eval(f, d) == 0 || z_eval(f, -d) == 0) throw validation_error(kReducibleMsg);
    }
    if (p <= 3 && !ds.empty()) return;

    // modular degree patterns
    auto parts = partitions_of(p);
    Int disc = resultant(f, z_derivative(f));
    unsigned used = 0;
    for (Int q = 2; q < 500 && used < 30; mpz_nextprime(q.get_mpz_t(), q.get_mpz_t())) {
        if (disc != 0 && mpz_divisible_p(disc.get_mpz_t(), q.get_mpz_t())) continue;
        if (!pm_is_squarefree(f, q)) continue;
        ++used;
        std::vector<unsigned> pattern;
        for (const auto& [d, count] : pm_distinct_degree_pattern(f, q))
            for (unsigned c = 0; c < count; ++c) pattern.push_back(d);
        if (pattern.size() == 1 && pattern[0] == p) return; // irreducible mod q
        std::erase_if(parts, [&](const std::vector<unsigned>& t) {
            return !pattern_refines(pattern, t);
        });
        if (parts.size() == 1 && parts[0].size() == 1) return; // only {p} left
    }

    if (kronecker_finds_factor(f)) throw validation_error(kReducibleMsg);
}

// --------------------------------------- fixed-point complex root refinement

// Values are scaled integers v ~ x * 2^bits.
struct FxC {
    Int re, im;
};

Int fx_mul(const Int& a, const Int& b, long bits) {
    Int t = a * b;
    mpz_fdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), bits);
    return t;
}

FxC fxc_mul(const FxC& a, const FxC& b, long bits) {
    return {fx_mul(a.re, b.re, bits) - fx_mul(a.im, b.im, bits),
            fx_mul(a.re, b.im, bits) + fx_mul(a.im, b.re, bits)};
}

FxC fxc_sub(const FxC& a, const FxC& b) { return {a.re - b.re, a.im - b.im}; }
FxC fxc_add(const FxC& a, const FxC& b) { return {a.re + b.re, a.im + b.im}; }

FxC fxc_div(const FxC& a, const FxC& b, long bits) {
    Int n2 = fx_mul(b.re, b.re, bits) + fx_mul(b.im, b.im, bits);
    if (n2 == 0) throw internal_error("fixed-point division by zero");
    FxC num = fxc_mul(a, {b.re, -b.im}, bits);
    Int rs = num.re << bits, is = num.im << bits;
    return {rs / n2, is / n2};
}

Int fx_from_double(double d, long bits) {
    int e = 0;
    double m = std::frexp(d, &e); // d = m * 2^e, |m| in [0.5, 1)
    auto mi = static_cast<long long>(m * 9007199254740992.0); // 2^53
    Int v(static_cast<long>(mi));
    long shift = bits + e - 53;
    if (shift >= 0) v <<= shift;
    else v >>= -shift;
    return v;
}

// f(z) and f'(z) by Horner, for integer-coefficient f
FxC fxc_poly_eval(const ZPoly& f, const FxC& z, long bits) {
    FxC acc{Int(0), Int(0)};
    for (std::size_t i = f.size(); i-- > 0;) {
        acc = fxc_mul(acc, z, bits);
        acc.re += f[i] << bits;
    }
    return acc;
}

std::vector<std::complex<double>> roots_double(const ZPoly& f, double angle_offset) {
    const int n = degree(f);
    std::vector<std::complex<double>> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = f[static_cast<std::size_t>(i)].get_d();
    double radius = 1.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, 1.0 + std::abs(c[i].real()));
    std::vector<std::complex<double>> z(n);
    for (int k = 0; k < n; ++k) {
        double a = 2.0 * M_PI * k / n + angle_offset;
        z[k] = radius * std::polar(1.0, a) * (0.9 + 0.01 * k);
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (int i = n; i >= 0; --i) acc = acc * x + c[i];
        return acc;
    };
    for (int iter = 0; iter < 600; ++iter) {
        double moved = 0;
        for (int k = 0; k < n; ++k) {
            std::complex<double> d = eval(z[k]);
            for (int j = 0; j < n; ++j)
                if (j != k) d /= (z[k] - z[j]);
            z[k] -= d;
            moved = std::max(moved, std::abs(d));
        }
        if (moved < 1e-14) break;
    }
    return z;
}

// Durand-Kerner entirely in fixed point; used when double seeds collide.
std::vector<FxC> roots_fixed_dk(const ZPoly& f, long bits) {
    const int n = degree(f);
    std::vector<FxC> z(n);
    for (int k = 0; k < n; ++k) {
        double a = 2.0 * M_PI * k / n + 0.3491;
        double r = 1.0;
        for (int i = 0; i < n; ++i)
            r = std::max(r, 1.0 + std::abs(f[static_cast<std::size_t>(i)].get_d()));
        z[k] = {fx_from_double(r * std::cos(a), bits), fx_from_double(r * std::sin(a), bits)};
    }
    const Int tol = Int(1) << (bits / 2);
    for (long iter = 0; iter < 400; ++iter) {
        Int moved = 0;
        for (int k = 0; k < n; ++k) {
            FxC d = fxc_poly_eval(f, z[k], bits);
            for (int j = 0; j < n; ++j)
                if (j != k) d = fxc_div(d, fxc_sub(z[k], z[j]), bits);
            z[k] = fxc_sub(z[k], d);
            Int m = abs(d.re) + abs(d.im);
            if (m > moved) moved = m;
        }
        if (moved < tol) break;
    }
    return z;
}

std::vector<FxC> refine_roots(const ZPoly& f, long bits) {
    const int n = degree(f);
    ZPoly fd = z_derivative(f);
    std::vector<FxC> out;

    for (int attempt = 0; attempt < 4; ++attempt) {
        out.clear();
        if (attempt < 3) {
            auto seeds = roots_double(f, 0.17 + 0.61 * attempt);
            for (auto s : seeds)
                out.push_back({fx_from_double(s.real(), bits), fx_from_double(s.imag(), bits)});
        } else {
            out = roots_fixed_dk(f, bits);
        }
        // Newton polish: quadratic convergence, 50-bit seeds
        for (auto& z : out) {
            for (int it = 0; it < 64; ++it) {
                FxC num = fxc_poly_eval(f, z, bits);
                FxC den = fxc_poly_eval(fd, z, bits);
                if (den.re == 0 && den.im == 0) break;
                FxC step = fxc_div(num, den, bits);
                z = fxc_sub(z, step);
                if (abs(step.re) + abs(step.im) < 2) break;
            }
        }
        // all roots distinct and residuals small?
        bool ok = true;
        const Int sep = Int(1) << (bits / 2);
        for (int i = 0; i < n && ok; ++i) {
            FxC r = fxc_poly_eval(f, out[static_cast<std::size_t>(i)], bits);
            if (abs(r.re) + abs(r.im) > sep) ok = false;
            for (int j = i + 1; j < n && ok; ++j) {
                FxC d = fxc_sub(out[static_cast<std::size_t>(i)], out[static_cast<std::size_t>(j)]);
                if (abs(d.re) + abs(d.im) < sep) ok = false;
            }
        }
        if (ok) return out;
    }
    return {};
}

// best rational approximation of v / 2^bits by continued-fraction convergents
std::optional<Rat> fx_to_rational(const Int& v, long bits, const Int& max_den) {
    Int num = v, den = Int(1) << bits;
    Int hm1 = 1, hm2 = 0, km1 = 0, km2 = 1; // h_{-1}=1, h_{-2}=0 convention
    Int n = num, d = den, a, r;
    Int besth = 0, bestk = 1;
    bool any = false;
    while (d != 0) {
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        Int h = a * hm1 + hm2;
        Int k = a * km1 + km2;
        if (k > max_den) break;
        besth = h;
        bestk = k;
        any = true;
        hm2 = hm1;
        hm1 = h;
        km2 = km1;
        km1 = k;
        n = d;
        d = r;
    }
    if (!any) return std::nullopt;
    // |v/2^bits - h/k| <= 2^{-bits/3}  <=>  |v k - h 2^bits| <= k 2^{2bits/3}
    Int err = abs(num * bestk - besth * den);
    if (err > (bestk << (2 * bits / 3))) return std::nullopt;
    Rat out(besth, bestk);
    out.canonicalize();
    return out;
}

// Lagrange interpolation of the candidate image polynomial for the root
// permutation pi: g(r_i) = r_{pi(i)}.
std::optional<QPoly> interpolate_candidate(const ZPoly& f, const std::vector<FxC>& roots,
                                           const std::vector<int>& pi, long bits,
                                           const Int& max_den) {
    const int p = degree(f);
    ZPoly fd = z_derivative(f);
    std::vector<FxC> acc(static_cast<std::size_t>(p), FxC{Int(0), Int(0)});
    for (int i = 0; i < p; ++i) {
        const FxC& r = roots[static_cast<std::size_t>(i)];
        // f / (x - r) by synthetic division
        std::vector<FxC> q(static_cast<std::size_t>(p));
        q[static_cast<std::size_t>(p - 1)] = {Int(1) << bits, Int(0)};
        for (int k = p - 1; k >= 1; --k) {
            FxC t = fxc_mul(r, q[static_cast<std::size_t>(k)], bits);
            t.re += f[static_cast<std::size_t>(k)] << bits;
            q[static_cast<std::size_t>(k - 1)] = t;
        }
        FxC w = fxc_div(roots[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])],
                        fxc_poly_eval(fd, r, bits), bits);
        for (int k = 0; k < p; ++k)
            acc[static_cast<std::size_t>(k)] =
                fxc_add(acc[static_cast<std::size_t>(k)], fxc_mul(w, q[static_cast<std::size_t>(k)], bits));
    }
    QPoly g(static_cast<std::size_t>(p));
    const Int imag_tol = Int(1) << (2 * bits / 3);
    for (int k = 0; k < p; ++k) {
        const FxC& c = acc[static_cast<std::size_t>(k)];
        if (abs(c.im) > imag_tol) return std::nullopt;
        auto rat = fx_to_rational(c.re, bits, max_den);
        if (!rat) return std::nullopt;
        g[static_cast<std::size_t>(k)] = *rat;
    }
    q_trim(g);
    return g;
}

// Certified non-normality: at a prime q not dividing disc(f), the
// factorization pattern of f is the cycle type of a Frobenius element. A
// cyclic group of prime order acting regularly only produces the all-linear
// and the irreducible patterns.
bool mixed_pattern_certificate(const NumField& L) {
    const unsigned p = L.degree;
    unsigned used = 0;
    for (Int q = 2; q < 600 && used < 40; mpz_nextprime(q.get_mpz_t(), q.get_mpz_t())) {
        if (mpz_divisible_p(L.poly_disc.get_mpz_t(), q.get_mpz_t())) continue;
        ++used;
        auto pattern = pm_distinct_degree_pattern(L.min_poly, q);
        bool all_linear = pattern.size() == 1 && pattern[0].first == 1 && pattern[0].second == p;
        bool irreducible = pattern.size() == 1 && pattern[0].first == p;
        if (!all_linear && !irreducible) return true;
    }
    return false;
}

} // namespace

// ------------------------------------------------------------- construction

NumField make_field(const ZPoly& f0) {
    ZPoly f = f0;
    while (!f.empty() && f.back() == 0) f.pop_back();
    int d = degree(f);
    if (d < 1) throw validation_error("defining polynomial must be nonconstant");
    if (f[static_cast<std::size_t>(d)] != 1) throw validation_error("defining polynomial must be monic");
    if (d < 2 || !is_prime(Int(d))) throw validation_error("degree must be a prime");
    check_irreducible(f);
    NumField L;
    L.degree = static_cast<unsigned>(d);
    L.min_poly = f;
    L.poly_disc = poly_discriminant(f);
    return L;
}

NumField make_field(const ZPoly& f, const QMat& integral_basis_columns) {
    NumField L = make_field(f);
    const unsigned p = L.degree;
    Lattice B = hnf(integral_basis_columns);
    if (B.dim() != p) throw validation_error("integral basis has wrong dimension");

    std::vector<Rat> e0(p, Rat(0)), e1(p, Rat(0));
    e0[0] = 1;
    if (p > 1) e1[1] = 1;
    if (!lattice_contains(B, e0)) throw validation_error("integral basis does not contain 1");
    if (!lattice_contains(B, e1)) throw validation_error("integral basis does not contain theta");

    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i; j < p; ++j) {
            FieldElem prod = elem_mul(L, FieldElem{lattice_column(B, i)}, FieldElem{lattice_column(B, j)});
            if (!lattice_contains(B, prod.coords))
                throw validation_error("integral basis is not multiplicatively closed");
        }

    Int idx = lattice_index(B, lattice_identity(p)); // [O_L : Z[theta]]
    if (!mpz_divisible_p(L.poly_disc.get_mpz_t(), Int(idx * idx).get_mpz_t()))
        throw internal_error("integral basis discriminant quotient is not a square");

    L.integral_basis = B;
    return L;
}

Lattice maximal_order(const NumField& L) {
    if (L.integral_basis) return *L.integral_basis;
    Factorization fd = factor(L.poly_disc);
    for (const auto& [q, e] : fd.factors)
        if (e >= 2)
            throw validation_error(
                "maximal order unknown: disc(f) is not squarefree, supply an integral basis");
    return lattice_identity(L.degree);
}

// ------------------------------------------------------------ element logic

FieldElem elem_from_coords(const NumField& L, std::vector<Rat> coords) {
    if (coords.size() != L.degree) throw validation_error("element has wrong coordinate length");
    return FieldElem{std::move(coords)};
}

FieldElem elem_one(const NumField& L) {
    std::vector<Rat> c(L.degree, Rat(0));
    c[0] = 1;
    return FieldElem{std::move(c)};
}

FieldElem elem_theta(const NumField& L) {
    std::vector<Rat> c(L.degree, Rat(0));
    c[1] = 1;
    return FieldElem{std::move(c)};
}


FieldElem elem_mul(const NumField& L, const FieldElem& a, const FieldElem& b) {
    QPoly prod = q_mod(q_mul(a.coords, b.coords), L.min_poly);
    prod.resize(L.degree, Rat(0));
    return FieldElem{std::move(prod)};
}

// ------------------------------------------------------------ automorphisms

bool verify_automorphism(const NumField& L, const QPoly& g0) {
    QPoly g = q_mod(g0, L.min_poly);
    if (q_is_x(g)) return false;
    QPoly fg = q_compose_mod(q_from_z(L.min_poly), g, L.min_poly);
    if (degree(fg) >= 0) return false;
    QPoly h = g;
    for (unsigned k = 1; k < L.degree; ++k) h = q_compose_mod(h, g, L.min_poly);
    return q_is_x(h);
}

QMat automorphism_matrix(const NumField& L, const AutMap& sigma) {
    const unsigned p = L.degree;
    QMat m(p, std::vector<Rat>(p, Rat(0)));
    QPoly power{Rat(1)};
    for (unsigned k = 0; k < p; ++k) {
        for (std::size_t i = 0; i < power.size(); ++i) m[i][k] = power[i];
        power = q_mod(q_mul(power, sigma.image_poly), L.min_poly);
    }
    return m;
}

std::optional<AutMap> find_automorphism(const NumField& L) {
    const unsigned p = L.degree;
    const ZPoly& f = L.min_poly;

    if (p == 2) {
        QPoly g{Rat(-f[1]), Rat(-1)}; // the conjugate root of x^2 + a1 x + a0
        if (!verify_automorphism(L, g))
            throw internal_error("quadratic conjugation failed verification");
        return AutMap{g};
    }

    // Galois of odd prime degree forces a cyclic group inside A_p, hence a
    // square discriminant; non-square disc certifies absence.
    if (L.poly_disc < 0 || mpz_perfect_square_p(L.poly_disc.get_mpz_t()) == 0)
        return std::nullopt;
    if (mixed_pattern_certificate(L)) return std::nullopt;

    for (long bits = 200; bits <= 3200; bits *= 2) {
        auto roots = refine_roots(f, bits);
        if (roots.empty()) continue;
        std::sort(roots.begin(), roots.end(), [](const FxC& a, const FxC& b) {
            return a.re != b.re ? a.re < b.re : a.im < b.im;
        });
        const Int max_den = Int(1) << (bits / 4);

        // sigma permutes the roots in a single p-cycle; enumerate cycles
        for (unsigned j = 1; j < p; ++j) {
            std::vector<int> others;
            for (unsigned i = 1; i < p; ++i)
                if (i != j) others.push_back(static_cast<int>(i));
            std::sort(others.begin(), others.end());
            do {
                std::vector<int> cycle{0, static_cast<int>(j)};
                cycle.insert(cycle.end(), others.begin(), others.end());
                std::vector<int> pi(p);
                for (unsigned k = 0; k < p; ++k)
                    pi[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % p];
                auto cand = interpolate_candidate(f, roots, pi, bits, max_den);
                if (cand && verify_automorphism(L, *cand))
                    return AutMap{q_mod(*cand, f)};
            } while (std::next_permutation(others.begin(), others.end()));
        }
    }
    throw internal_error("automorphism search inconclusive");
}

bool is_galois(const NumField& L) { return find_automorphism(L).has_value(); }

// ------------------------------------------------------------ prime shapes

namespace {

bool dedekind_index_coprime(const ZPoly& f, const Int& p) {
    auto parts = pm_squarefree_decomposition(f, p);
    ZPoly rad{Int(1)};
    for (const auto& [g, m] : parts) rad = pm_mul(rad, g, p);
    ZPoly fbar = pm_reduce(f, p);
    ZPoly hbar = pm_divmod(fbar, rad, p).first;

    ZPoly gh = z_mul(rad, hbar);
    ZPoly diff(std::max(gh.size(), f.size()), Int(0));
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] += gh[i];
    for (std::size_t i = 0; i < f.size(); ++i) diff[i] -= f[i];
    ZPoly T(diff.size());
    for (std::size_t i = 0; i < diff.size(); ++i)
        mpz_divexact(T[i].get_mpz_t(), diff[i].get_mpz_t(), p.get_mpz_t());

    ZPoly d = pm_gcd(T, pm_gcd(rad, hbar, p), p);
    return degree(d) <= 0;
}

} // namespace

SplitShape splitting_type(const NumField& L, const Int& p) {
    if (!is_prime(p)) throw validation_error("splitting_type requires a prime");

    bool certified = !mpz_divisible_p(L.poly_disc.get_mpz_t(), Int(p * p).get_mpz_t());
    if (!certified && L.integral_basis) {
        Int idx = lattice_index(*L.integral_basis, lattice_identity(L.degree));
        Int g;
        mpz_gcd(g.get_mpz_t(), idx.get_mpz_t(), p.get_mpz_t());
        certified = (g == 1);
    }
    if (!certified) certified = dedekind_index_coprime(L.min_poly, p);
    if (!certified)
        throw validation_error("index divisor at " + p.get_str() + ": unsupported input");

    SplitShape shape;
    for (const auto& [d, e] : pm_factor_shape(L.min_poly, p))
        shape.factors.push_back(SplitFactor{d, e});
    std::sort(shape.factors.begin(), shape.factors.end());

    unsigned total = 0;
    for (const auto& fac : shape.factors) total += fac.residue_degree * fac.ram_index;
    if (total != L.degree) throw internal_error("splitting degrees do not sum to the field degree");
    return shape;
}

} // namespace ordsel
