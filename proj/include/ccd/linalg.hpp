#pragma once

#include <cstddef>
#include <vector>

#include "ccd/gf.hpp"

namespace ccd {

// Dense exact linear algebra over tower elements. Matrices are row vectors;
// all entries must share one tower (and, for meaningful results, one level —
// field operations never leave a level, so closure is automatic).
using Row = std::vector<FieldElem>;
using Matrix = std::vector<Row>;

// Reduced row echelon form (in place); returns the pivot column indices.
std::vector<size_t> row_reduce(Matrix& m);

size_t rank(Matrix m);

// Basis of the right kernel {v : M v = 0}, in RREF-derived canonical form
// (one basis vector per free column, free columns ascending).
Matrix kernel_basis(const Matrix& m);

bool in_row_space(Matrix basis, const Row& v);

// True iff the two row spaces coincide (dimension + mutual containment).
bool same_row_space(const Matrix& a, const Matrix& b);

}  // namespace ccd
