#pragma once

#include <vector>

#include "isodual/gf.hpp"

namespace isodual {

using Row = std::vector<FieldElem>;
using Matrix = std::vector<Row>;

// in-place reduced row echelon form; returns the pivot column of each
// surviving row (zero rows are removed).  Deterministic: first nonzero pivot
// in column order.
std::vector<int> rref(Matrix& M, const FieldCtx& F);

int rank(Matrix M, const FieldCtx& F);

// canonical nullspace basis of M (as row vectors of length #cols), from the
// free-variable construction on the RREF
Matrix nullspace(const Matrix& M, int cols, const FieldCtx& F);

bool same_row_space(Matrix A, Matrix B, const FieldCtx& F);

Row mat_vec(const Matrix& M, const Row& v, const FieldCtx& F);  // M rows . v

// Coordinates of elements of a residue field K = F_{p^(m_sub * r)} over the
// constant field F_q (via emb), with respect to the power basis
// {1, theta, ..., theta^(r-1)}.  theta must generate K over the embedded F_q.
class SubfieldCoords {
  public:
    SubfieldCoords(const FieldCtx& K, const Embedding& emb, FieldElem theta, int r);
    // length-r vector over F_q
    std::vector<FieldElem> coords(FieldElem a) const;
    int r() const { return r_; }

  private:
    const FieldCtx* K_;
    const FieldCtx* sub_;
    int r_;
    int n_;                      // K.m, dimension over F_p
    std::vector<std::vector<int>> inv_;  // inverse basis matrix over F_p
};

}  // namespace isodual
