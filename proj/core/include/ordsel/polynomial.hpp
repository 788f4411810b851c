#ifndef ORDSEL_POLYNOMIAL_HPP
#define ORDSEL_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "ordsel/arith.hpp"

namespace ordsel {

// Coefficient vectors, constant term first. The zero polynomial is the
// empty vector (degree -1).
using ZPoly = std::vector<Int>;
using QPoly = std::vector<Rat>;

int degree(const ZPoly& f);
int degree(const QPoly& f);
void q_trim(QPoly& f);

QPoly q_from_z(const ZPoly& f);
bool q_is_x(const QPoly& f);

QPoly q_add(const QPoly& a, const QPoly& b);
QPoly q_mul(const QPoly& a, const QPoly& b);
// division with remainder, b != 0
std::pair<QPoly, QPoly> q_divmod(const QPoly& a, const QPoly& b);

// a(x) mod f(x), f monic
QPoly q_mod(const QPoly& a, const ZPoly& f);
// g(h(x)) mod f(x), f monic
QPoly q_compose_mod(const QPoly& g, const QPoly& h, const ZPoly& f);

ZPoly z_derivative(const ZPoly& f);
Int z_eval(const ZPoly& f, const Int& x);
// Sylvester-matrix resultant over Z
Int resultant(const ZPoly& a, const ZPoly& b);
// (-1)^{n(n-1)/2} res(f, f') for monic f
Int poly_discriminant(const ZPoly& f);

// ---- arithmetic in F_p[x]; coefficients kept reduced into [0, p) ----

ZPoly pm_reduce(const ZPoly& f, const Int& p);
ZPoly pm_mul(const ZPoly& a, const ZPoly& b, const Int& p);
std::pair<ZPoly, ZPoly> pm_divmod(const ZPoly& a, const ZPoly& b, const Int& p);
ZPoly pm_gcd(ZPoly a, ZPoly b, const Int& p); // monic gcd, or zero
ZPoly pm_powmod(const ZPoly& base, const Int& e, const ZPoly& mod, const Int& p);
ZPoly pm_derivative(const ZPoly& f, const Int& p);
bool pm_is_squarefree(const ZPoly& f, const Int& p);

// f = prod parts[i].first ^ parts[i].second with the first components
// squarefree and pairwise coprime (characteristic-p aware).
std::vector<std::pair<ZPoly, unsigned>> pm_squarefree_decomposition(const ZPoly& f, const Int& p);

// degrees of the irreducible factors of squarefree u, as (degree, count)
std::vector<std::pair<unsigned, unsigned>> pm_distinct_degree_pattern(const ZPoly& u, const Int& p);

// one entry (residue degree, multiplicity) per irreducible factor of f mod p
std::vector<std::pair<unsigned, unsigned>> pm_factor_shape(const ZPoly& f, const Int& p);

} // namespace ordsel

#endif
