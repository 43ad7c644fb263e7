#include "isodual/funcrep.hpp"

#include <sstream>

namespace isodual {

FunctionRep::FunctionRep(const StepRelation& rel, std::vector<RatFun> coeffs)
    : rel_(&rel), c_(std::move(coeffs)) {
    if ((int)c_.size() > rel.m) throw std::invalid_argument("too many basis coefficients");
    while ((int)c_.size() < rel.m) c_.push_back(RatFun::zero(rel.field()));
}

FunctionRep FunctionRep::zero(const StepRelation& rel) { return FunctionRep(rel, {}); }

FunctionRep FunctionRep::one(const StepRelation& rel) {
    return FunctionRep(rel, {RatFun::one(rel.field())});
}

FunctionRep FunctionRep::generator(const StepRelation& rel) {
    return FunctionRep(rel, {RatFun::zero(rel.field()), RatFun::one(rel.field())});
}

FunctionRep FunctionRep::from_base(const StepRelation& rel, RatFun f) {
    return FunctionRep(rel, {std::move(f)});
}

FunctionRep FunctionRep::constant(const StepRelation& rel, FieldElem c) {
    return from_base(rel, RatFun::constant(rel.field(), c));
}

const StepRelation& FunctionRep::relation() const {
    if (!rel_) throw std::logic_error("empty FunctionRep");
    return *rel_;
}

bool FunctionRep::is_zero() const {
    for (const auto& f : c_)
        if (!f.is_zero()) return false;
    return true;
}

bool FunctionRep::is_base() const {
    for (size_t j = 1; j < c_.size(); ++j)
        if (!c_[j].is_zero()) return false;
    return true;
}

void FunctionRep::check_compatible(const FunctionRep& o) const {
    if (rel_ != o.rel_) throw std::invalid_argument("FunctionRep relation mismatch");
}

FunctionRep FunctionRep::operator+(const FunctionRep& o) const {
    check_compatible(o);
    std::vector<RatFun> c(c_.size());
    for (size_t j = 0; j < c_.size(); ++j) c[j] = c_[j] + o.c_[j];
    return FunctionRep(*rel_, std::move(c));
}

FunctionRep FunctionRep::operator-(const FunctionRep& o) const {
    check_compatible(o);
    std::vector<RatFun> c(c_.size());
    for (size_t j = 0; j < c_.size(); ++j) c[j] = c_[j] - o.c_[j];
    return FunctionRep(*rel_, std::move(c));
}

FunctionRep FunctionRep::operator*(const FunctionRep& o) const {
    check_compatible(o);
    const FieldCtx& F = rel_->field();
    int m = rel_->m;
    std::vector<RatFun> prod(2 * m - 1, RatFun::zero(F));
    for (int i = 0; i < m; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; j < m; ++j) {
            if (o.c_[j].is_zero()) continue;
            prod[i + j] = prod[i + j] + c_[i] * o.c_[j];
        }
    }
    // reduce with g^m = u - g, one degree at a time
    for (int d = 2 * m - 2; d >= m; --d) {
        if (prod[d].is_zero()) continue;
        RatFun c = prod[d];
        prod[d] = RatFun::zero(F);
        prod[d - m] = prod[d - m] + c * rel_->u;
        prod[d - m + 1] = prod[d - m + 1] - c;
    }
    prod.resize(m);
    return FunctionRep(*rel_, std::move(prod));
}

FunctionRep FunctionRep::operator*(const RatFun& s) const {
    std::vector<RatFun> c(c_.size());
    for (size_t j = 0; j < c_.size(); ++j) c[j] = c_[j] * s;
    return FunctionRep(*rel_, std::move(c));
}

FunctionRep FunctionRep::scaled(FieldElem s) const {
    return *this * RatFun::constant(rel_->field(), s);
}

FunctionRep FunctionRep::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of the zero function");
    const FieldCtx& F = rel_->field();
    int m = rel_->m;
    // columns of the multiplication-by-*this matrix on the power basis
    std::vector<std::vector<RatFun>> A(m, std::vector<RatFun>(m, RatFun::zero(F)));
    FunctionRep g = generator(*rel_);
    FunctionRep pw = one(*rel_);
    for (int j = 0; j < m; ++j) {
        FunctionRep col = *this * pw;
        for (int i = 0; i < m; ++i) A[i][j] = col.coef(i);
        pw = pw * g;
    }
    std::vector<RatFun> b(m, RatFun::zero(F));
    b[0] = RatFun::one(F);
    return FunctionRep(*rel_, solve_ratfun_system(std::move(A), std::move(b)));
}

FunctionRep FunctionRep::power(long k) const {
    if (k == 0) return one(*rel_);
    FunctionRep base = k < 0 ? inverse() : *this;
    long e = k < 0 ? -k : k;
    FunctionRep acc = base;
    for (long i = 1; i < e; ++i) acc = acc * base;
    return acc;
}

bool FunctionRep::operator==(const FunctionRep& o) const {
    return rel_ == o.rel_ && c_ == o.c_;
}

std::string FunctionRep::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[j].str() << ")";
        if (j == 1) os << "*g";
        if (j > 1) os << "*g^" << j;
    }
    if (first) os << "0";
    return os.str();
}

FunctionRep eval_poly_at(const Poly& p, const FunctionRep& arg) {
    const StepRelation& rel = arg.relation();
    FunctionRep acc = FunctionRep::constant(rel, p.is_zero() ? 0 : p.coeff(p.deg()));
    for (int i = p.deg() - 1; i >= 0; --i)
        acc = acc * arg + FunctionRep::constant(rel, p.coeff(i));
    return acc;
}

std::vector<RatFun> solve_ratfun_system(std::vector<std::vector<RatFun>> A,
                                        std::vector<RatFun> b) {
    size_t n = A.size();
    for (size_t c = 0, r = 0; c < n && r < n; ++c) {
        size_t sel = r;
        while (sel < n && A[sel][c].is_zero()) ++sel;
        if (sel == n) continue;
        std::swap(A[r], A[sel]);
        std::swap(b[r], b[sel]);
        RatFun inv = A[r][c].inverse();
        for (size_t j = c; j < n; ++j) A[r][j] = A[r][j] * inv;
        b[r] = b[r] * inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            RatFun f = A[i][c];
            for (size_t j = c; j < n; ++j) A[i][j] = A[i][j] - f * A[r][j];
            b[i] = b[i] - f * b[r];
        }
        ++r;
    }
    for (size_t i = 0; i < n; ++i) {
        bool all_zero = true;
        for (size_t j = 0; j < n; ++j) all_zero = all_zero && A[i][j].is_zero();
        if (all_zero && !b[i].is_zero())
            throw std::domain_error("singular system (element is a zero divisor?)");
    }
    return b;
}

}  // namespace isodual
