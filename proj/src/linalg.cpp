#include "isodual/linalg.hpp"

#include <algorithm>

namespace isodual {

std::vector<int> rref(Matrix& M, const FieldCtx& F) {
    std::vector<int> pivots;
    if (M.empty()) return pivots;
    size_t cols = M[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < M.size(); ++c) {
        size_t sel = r;
        while (sel < M.size() && M[sel][c] == 0) ++sel;
        if (sel == M.size()) continue;
        std::swap(M[r], M[sel]);
        FieldElem inv = F.inv(M[r][c]);
        for (size_t j = c; j < cols; ++j) M[r][j] = F.mul(M[r][j], inv);
        for (size_t i = 0; i < M.size(); ++i) {
            if (i == r || M[i][c] == 0) continue;
            FieldElem f = M[i][c];
            for (size_t j = c; j < cols; ++j) M[i][j] = F.sub(M[i][j], F.mul(f, M[r][j]));
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    M.resize(r);
    return pivots;
}

int rank(Matrix M, const FieldCtx& F) { return static_cast<int>(rref(M, F).size()); }

Matrix nullspace(const Matrix& M, int cols, const FieldCtx& F) {
    Matrix R = M;
    for (auto& row : R)
        if ((int)row.size() != cols) throw std::invalid_argument("ragged matrix");
    std::vector<int> pivots = rref(R, F);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    Matrix basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        Row v(cols, 0);
        v[fc] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(R[i][fc]);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool same_row_space(Matrix A, Matrix B, const FieldCtx& F) {
    rref(A, F);
    rref(B, F);
    return A == B;
}

Row mat_vec(const Matrix& M, const Row& v, const FieldCtx& F) {
    Row out(M.size(), 0);
    for (size_t i = 0; i < M.size(); ++i) {
        FieldElem acc = 0;
        for (size_t j = 0; j < v.size(); ++j) acc = F.add(acc, F.mul(M[i][j], v[j]));
        out[i] = acc;
    }
    return out;
}

namespace {

std::vector<int> p_digits(int v, int p, int n) {
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

}  // namespace

SubfieldCoords::SubfieldCoords(const FieldCtx& K, const Embedding& emb, FieldElem theta, int r)
    : K_(&K), sub_(emb.sub), r_(r), n_(K.m) {
    if (emb.sup != &K) throw std::invalid_argument("embedding target mismatch");
    if (sub_->m * r != n_) throw std::invalid_argument("degree mismatch in residue basis");
    int p = K.p;
    // basis matrix over F_p: column (j, i) = theta^j * emb(w^i)
    std::vector<std::vector<int>> mat(n_, std::vector<int>(n_, 0));
    FieldElem theta_pow = 1;
    for (int j = 0; j < r_; ++j) {
        for (int i = 0; i < sub_->m; ++i) {
            FieldElem wi = 1;
            for (int t = 0; t < i; ++t) wi *= p;  // encoding of w^i in the subfield
            FieldElem val = K.mul(theta_pow, emb(wi));
            auto digits = p_digits(val, p, n_);
            for (int row = 0; row < n_; ++row) mat[row][j * sub_->m + i] = digits[row];
        }
        theta_pow = K.mul(theta_pow, theta);
    }
    // invert over F_p by Gauss-Jordan
    std::vector<std::vector<int>> aug(n_, std::vector<int>(2 * n_, 0));
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) aug[i][j] = mat[i][j];
        aug[i][n_ + i] = 1;
    }
    auto mod_inv = [&](int a) {
        for (int x = 1; x < p; ++x)
            if (a * x % p == 1) return x;
        throw std::logic_error("prime inverse");
    };
    int row = 0;
    for (int c = 0; c < n_ && row < n_; ++c) {
        int sel = row;
        while (sel < n_ && aug[sel][c] == 0) ++sel;
        if (sel == n_) continue;
        std::swap(aug[row], aug[sel]);
        int f = mod_inv(aug[row][c]);
        for (int j = 0; j < 2 * n_; ++j) aug[row][j] = aug[row][j] * f % p;
        for (int i = 0; i < n_; ++i) {
            if (i == row || aug[i][c] == 0) continue;
            int g = aug[i][c];
            for (int j = 0; j < 2 * n_; ++j)
                aug[i][j] = ((aug[i][j] - g * aug[row][j]) % p + p) % p;
        }
        ++row;
    }
    if (row != n_) throw std::invalid_argument("theta powers do not span the residue field");
    inv_.assign(n_, std::vector<int>(n_, 0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) inv_[i][j] = aug[i][n_ + j];
}

std::vector<FieldElem> SubfieldCoords::coords(FieldElem a) const {
    int p = K_->p;
    auto digits = p_digits(a, p, n_);
    std::vector<int> x(n_, 0);
    for (int i = 0; i < n_; ++i) {
        int acc = 0;
        for (int j = 0; j < n_; ++j) acc = (acc + inv_[i][j] * digits[j]) % p;
        x[i] = acc;
    }
    std::vector<FieldElem> out(r_, 0);
    for (int j = 0; j < r_; ++j) {
        int enc = 0;
        for (int i = sub_->m - 1; i >= 0; --i) enc = enc * p + x[j * sub_->m + i];
        out[j] = enc;
    }
    return out;
}

}  // namespace isodual
