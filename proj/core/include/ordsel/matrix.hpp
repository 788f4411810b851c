#ifndef ORDSEL_MATRIX_HPP
#define ORDSEL_MATRIX_HPP

#include <vector>

#include "ordsel/arith.hpp"

namespace ordsel {

// Dense row-major matrices over Z and Q. Everything here is exact; sizes
// are desk scale (degree <= 7 fields), so no attention is paid to asymptotics.
using ZMat = std::vector<std::vector<Int>>;
using QMat = std::vector<std::vector<Rat>>;

ZMat zmat_identity(std::size_t n);
QMat qmat_identity(std::size_t n);
QMat qmat_from_z(const ZMat& m);

QMat qmat_mul(const QMat& a, const QMat& b);
std::vector<Rat> qmat_apply(const QMat& a, const std::vector<Rat>& v);

// Gaussian elimination; throws validation_error("matrix is singular") on
// singular input.
QMat qmat_inverse(const QMat& m);

// Fraction-free Bareiss determinant.
Int zmat_det(ZMat m);

// Canonical column-style Hermite normal form of the lattice spanned by the
// columns of m (p x n, n >= p). Result is p x p upper triangular with
// positive diagonal and entries right of each pivot reduced modulo it.
// Throws validation_error("not full rank") when the columns span rank < p.
ZMat hnf_columns(const ZMat& m);

} // namespace ordsel

#endif
