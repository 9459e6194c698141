#pragma once
#include <gmpxx.h>

#include <vector>

namespace cremona {

// Row-major integer matrix.
using ZMat = std::vector<std::vector<mpz_class>>;

// Basis of the right kernel { v : m v = 0 } as vectors in Z^cols.
std::vector<std::vector<mpz_class>> integer_kernel(const ZMat& m);

// Canonical Hermite form of the lattice spanned by the rows: row echelon,
// positive pivots, entries above each pivot reduced into [0, pivot).
// Zero rows are dropped.
ZMat hermite_form(ZMat rows);

// Diagonal entries of the Smith normal form of m (each divides the next,
// zeros trail).
std::vector<mpz_class> smith_diagonal(ZMat m);

} // namespace cremona
