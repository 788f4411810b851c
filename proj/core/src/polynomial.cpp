#include "ordsel/polynomial.hpp"

#include <algorithm>

#include "ordsel/matrix.hpp"

namespace ordsel {

namespace {

void z_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Int mod_pos(const Int& a, const Int& p) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

Int inv_mod(const Int& a, const Int& p) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw internal_error("non-invertible element mod p");
    return r;
}

} // namespace

int degree(const ZPoly& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (f[i] != 0) return static_cast<int>(i);
    return -1;
}

int degree(const QPoly& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (f[i] != 0) return static_cast<int>(i);
    return -1;
}

void q_trim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly q_from_z(const ZPoly& f) {
    QPoly g(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) g[i] = f[i];
    q_trim(g);
    return g;
}

bool q_is_x(const QPoly& f) {
    QPoly g = f;
    q_trim(g);
    return g.size() == 2 && g[0] == 0 && g[1] == 1;
}

QPoly q_add(const QPoly& a, const QPoly& b) {
    QPoly c(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    q_trim(c);
    return c;
}


QPoly q_mul(const QPoly& a, const QPoly& b) {
    if (degree(a) < 0 || degree(b) < 0) return {};
    QPoly c(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    q_trim(c);
    return c;
}

std::pair<QPoly, QPoly> q_divmod(const QPoly& a, const QPoly& b) {
    int db = degree(b);
    if (db < 0) throw validation_error("polynomial division by zero");
    QPoly r = a;
    q_trim(r);
    int dr = degree(r);
    if (dr < db) return {{}, r};
    QPoly q(dr - db + 1, Rat(0));
    const Rat lead = b[db];
    while ((dr = degree(r)) >= db) {
        Rat c = r[dr] / lead;
        q[dr - db] = c;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= c * b[i];
        r[dr] = 0;
    }
    q_trim(r);
    q_trim(q);
    return {q, r};
}


QPoly q_mod(const QPoly& a, const ZPoly& f) {
    return q_divmod(a, q_from_z(f)).second;
}

QPoly q_compose_mod(const QPoly& g, const QPoly& h, const ZPoly& f) {
    QPoly acc;
    for (std::size_t i = g.size(); i-- > 0;) {
        acc = q_mul(acc, h);
        if (g[i] != 0) {
            if (acc.empty()) acc.push_back(g[i]);
            else acc[0] += g[i];
        }
        acc = q_mod(acc, f);
    }
    return acc;
}

ZPoly z_derivative(const ZPoly& f) {
    ZPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(Int(static_cast<long>(i)) * f[i]);
    z_trim(d);
    return d;
}

Int z_eval(const ZPoly& f, const Int& x) {
    Int acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

Int resultant(const ZPoly& a, const ZPoly& b) {
    int da = degree(a), db = degree(b);
    if (da < 0 || db < 0) return 0;
    if (da == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), a[0].get_mpz_t(), db);
        return r;
    }
    if (db == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), b[0].get_mpz_t(), da);
        return r;
    }
    const std::size_t n = static_cast<std::size_t>(da + db);
    ZMat s(n, std::vector<Int>(n, 0));
    for (int row = 0; row < db; ++row)
        for (int k = 0; k <= da; ++k) s[row][row + k] = a[da - k];
    for (int row = 0; row < da; ++row)
        for (int k = 0; k <= db; ++k) s[db + row][row + k] = b[db - k];
    return zmat_det(std::move(s));
}

Int poly_discriminant(const ZPoly& f) {
    int n = degree(f);
    if (n < 1) throw validation_error("discriminant needs degree >= 1");
    if (f[n] != 1) throw validation_error("discriminant implemented for monic input");
    Int res = resultant(f, z_derivative(f));
    return (n % 4 == 2 || n % 4 == 3) ? -res : res;
}

ZPoly pm_reduce(const ZPoly& f, const Int& p) {
    ZPoly g(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) g[i] = mod_pos(f[i], p);
    z_trim(g);
    return g;
}

ZPoly pm_mul(const ZPoly& a, const ZPoly& b, const Int& p) {
    if (degree(a) < 0 || degree(b) < 0) return {};
    ZPoly c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return pm_reduce(c, p);
}

std::pair<ZPoly, ZPoly> pm_divmod(const ZPoly& a, const ZPoly& b, const Int& p) {
    ZPoly r = pm_reduce(a, p);
    ZPoly d = pm_reduce(b, p);
    int db = degree(d);
    if (db < 0) throw validation_error("polynomial division by zero");
    int dr = degree(r);
    if (dr < db) return {{}, r};
    ZPoly q(dr - db + 1, Int(0));
    Int linv = inv_mod(d[db], p);
    while ((dr = degree(r)) >= db) {
        Int c = mod_pos(r[dr] * linv, p);
        q[dr - db] = c;
        for (int i = 0; i <= db; ++i)
            r[dr - db + i] = mod_pos(r[dr - db + i] - c * d[i], p);
    }
    z_trim(q);
    z_trim(r);
    return {q, r};
}

ZPoly pm_gcd(ZPoly a, ZPoly b, const Int& p) {
    a = pm_reduce(a, p);
    b = pm_reduce(b, p);
    while (degree(b) >= 0) {
        ZPoly r = pm_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    int da = degree(a);
    if (da < 0) return a;
    Int linv = inv_mod(a[da], p);
    for (auto& c : a) c = mod_pos(c * linv, p);
    return a;
}

ZPoly pm_powmod(const ZPoly& base, const Int& e, const ZPoly& mod, const Int& p) {
    ZPoly result{Int(1)};
    ZPoly b = pm_divmod(base, mod, p).second;
    Int exp = e;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t()))
            result = pm_divmod(pm_mul(result, b, p), mod, p).second;
        b = pm_divmod(pm_mul(b, b, p), mod, p).second;
        exp >>= 1;
    }
    return result;
}

ZPoly pm_derivative(const ZPoly& f, const Int& p) {
    ZPoly d;
    for (std::size_t i = 1; i < f.size(); ++i)
        d.push_back(mod_pos(Int(static_cast<long>(i)) * f[i], p));
    z_trim(d);
    return d;
}

bool pm_is_squarefree(const ZPoly& f, const Int& p) {
    ZPoly g = pm_gcd(f, pm_derivative(f, p), p);
    return degree(g) == 0;
}

namespace {

// f with f' = 0 over F_p is g(x^p); Frobenius is the identity on F_p, so the
// coefficients carry over unchanged.
ZPoly pm_pth_root(const ZPoly& f, const Int& p) {
    unsigned long pu = p.get_ui();
    ZPoly h;
    for (std::size_t i = 0; i < f.size(); i += pu) h.push_back(f[i]);
    return h;
}

} // namespace

std::vector<std::pair<ZPoly, unsigned>> pm_squarefree_decomposition(const ZPoly& f0, const Int& p) {
    std::vector<std::pair<ZPoly, unsigned>> out;
    ZPoly f = pm_reduce(f0, p);
    int df = degree(f);
    if (df <= 0) return out;
    // make monic
    Int linv = inv_mod(f[df], p);
    for (auto& c : f) c = mod_pos(c * linv, p);

    ZPoly fp = pm_derivative(f, p);
    if (degree(fp) < 0) {
        for (auto& [g, m] : pm_squarefree_decomposition(pm_pth_root(f, p), p))
            out.emplace_back(g, m * static_cast<unsigned>(p.get_ui()));
        return out;
    }

    ZPoly c = pm_gcd(f, fp, p);
    ZPoly w = pm_divmod(f, c, p).first;
    unsigned i = 1;
    while (degree(w) > 0) {
        ZPoly y = pm_gcd(w, c, p);
        ZPoly z = pm_divmod(w, y, p).first;
        if (degree(z) > 0) out.emplace_back(z, i);
        ++i;
        w = std::move(y);
        c = pm_divmod(c, w, p).first;
    }
    if (degree(c) > 0) {
        for (auto& [g, m] : pm_squarefree_decomposition(pm_pth_root(c, p), p))
            out.emplace_back(g, m * static_cast<unsigned>(p.get_ui()));
    }
    return out;
}

std::vector<std::pair<unsigned, unsigned>> pm_distinct_degree_pattern(const ZPoly& u0, const Int& p) {
    std::vector<std::pair<unsigned, unsigned>> out;
    ZPoly v = pm_reduce(u0, p);
    int dv = degree(v);
    if (dv <= 0) return out;
    Int linv = inv_mod(v[dv], p);
    for (auto& c : v) c = mod_pos(c * linv, p);

    ZPoly x{Int(0), Int(1)};
    ZPoly h = pm_divmod(x, v, p).second; // x mod v
    unsigned d = 0;
    while (degree(v) > 0) {
        ++d;
        if (2 * d > static_cast<unsigned>(degree(v))) {
            out.emplace_back(static_cast<unsigned>(degree(v)), 1u);
            break;
        }
        h = pm_powmod(h, p, v, p); // h = x^{p^d} mod v
        ZPoly hx = h;
        if (hx.size() < 2) hx.resize(2, Int(0));
        hx[1] = mod_pos(hx[1] - 1, p); // h - x
        ZPoly g = pm_gcd(hx, v, p);
        if (degree(g) > 0) {
            out.emplace_back(d, static_cast<unsigned>(degree(g)) / d);
            v = pm_divmod(v, g, p).first;
            h = pm_divmod(h, v, p).second;
        }
    }
    return out;
}

std::vector<std::pair<unsigned, unsigned>> pm_factor_shape(const ZPoly& f, const Int& p) {
    std::vector<std::pair<unsigned, unsigned>> shape;
    for (const auto& [part, mult] : pm_squarefree_decomposition(f, p)) {
        for (const auto& [d, count] : pm_distinct_degree_pattern(part, p))
            for (unsigned c = 0; c < count; ++c) shape.emplace_back(d, mult);
    }
    std::sort(shape.begin(), shape.end());
    return shape;
}

} // namespace ordsel
