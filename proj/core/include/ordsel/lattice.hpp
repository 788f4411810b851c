#ifndef ORDSEL_LATTICE_HPP
#define ORDSEL_LATTICE_HPP

#include <vector>

#include "ordsel/arith.hpp"
#include "ordsel/matrix.hpp"

namespace ordsel {

// A full-rank lattice in Q^p: the column span of basis/den with basis in
// canonical column HNF and gcd(content(basis), den) = 1. Equal lattices have
// identical representations, so operator== is semantic equality.
struct Lattice {
    ZMat basis; // p x p upper triangular, positive diagonal, reduced
    Int den = 1;

    std::size_t dim() const { return basis.size(); }
    bool operator==(const Lattice&) const = default;
};

// Canonicalize the span of the given columns (p x n, n >= p). Throws
// validation_error("not full rank") on rank-deficient input.
Lattice hnf(const QMat& columns);
Lattice lattice_identity(std::size_t p);

// column j of the basis as a rational vector
std::vector<Rat> lattice_column(const Lattice& L, std::size_t j);

bool lattice_contains(const Lattice& L, const std::vector<Rat>& v);
bool lattice_subset(const Lattice& inner, const Lattice& outer);

Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice lattice_dual(const Lattice& L);
Lattice intersect(const Lattice& a, const Lattice& b);

// |det| of the basis matrix over Q: the covolume relative to Z^p.
Rat lattice_covolume(const Lattice& L);

// [outer : inner] for inner a full-rank sublattice of outer; throws
// validation_error("not a sublattice") otherwise.
Int lattice_index(const Lattice& outer, const Lattice& inner);

} // namespace ordsel

#endif
