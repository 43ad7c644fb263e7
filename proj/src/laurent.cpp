#include "isodual/laurent.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace isodual {

namespace {
constexpr long kInf = LONG_MAX / 4;
// window length standing in for "exact" constants; comfortably above the
// expansion precision cap (256)
constexpr long kWidePrec = 4096;
}

LaurentSeries LaurentSeries::zero(const FieldCtx& F) {
    LaurentSeries s;
    s.F_ = &F;
    s.exact_zero_ = true;
    return s;
}

LaurentSeries::LaurentSeries(const FieldCtx& F, long v, std::vector<FieldElem> c)
    : F_(&F), v_(v), c_(std::move(c)), exact_zero_(false) {
    if (c_.empty()) throw std::invalid_argument("empty coefficient window");
}

LaurentSeries LaurentSeries::constant(const FieldCtx& F, FieldElem a, long prec) {
    if (prec < 1) prec = 1;
    std::vector<FieldElem> c(static_cast<size_t>(prec), 0);
    c[0] = a;
    return LaurentSeries(F, 0, std::move(c));
}

LaurentSeries LaurentSeries::monomial(const FieldCtx& F, FieldElem a, long e, long prec) {
    return constant(F, a, prec).shifted(e);
}

long LaurentSeries::known_until() const {
    return exact_zero_ ? kInf : v_ + static_cast<long>(c_.size());
}

LaurentSeries LaurentSeries::normalized() const {
    if (exact_zero_) return *this;
    size_t i = 0;
    while (i < c_.size() && c_[i] == 0) ++i;
    if (i == 0) return *this;
    LaurentSeries r = *this;
    r.c_.erase(r.c_.begin(), r.c_.begin() + i);
    r.v_ += static_cast<long>(i);
    return r;
}

std::optional<long> LaurentSeries::try_valuation() const {
    if (exact_zero_) return std::nullopt;
    LaurentSeries n = normalized();
    if (n.c_.empty()) return std::nullopt;
    return n.v_;
}

long LaurentSeries::valuation() const {
    if (exact_zero_) throw std::domain_error("valuation of the zero series");
    auto v = try_valuation();
    if (!v)
        throw PrecisionError("series is zero to the computed precision (O(t^" +
                             std::to_string(known_until()) + "))");
    return *v;
}

FieldElem LaurentSeries::coeff(long e) const {
    if (exact_zero_) return 0;
    if (e < v_) return 0;
    if (e >= known_until()) throw PrecisionError("coefficient beyond series window");
    return c_[static_cast<size_t>(e - v_)];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    if (exact_zero_) return o;
    if (o.exact_zero_) return *this;
    long v = std::min(v_, o.v_);
    long end = std::min(known_until(), o.known_until());
    if (end <= v) throw PrecisionError("series addition with empty window");
    std::vector<FieldElem> c(static_cast<size_t>(end - v), 0);
    for (long e = v; e < end; ++e) c[static_cast<size_t>(e - v)] = F_->add(coeff(e), o.coeff(e));
    return LaurentSeries(*F_, v, std::move(c));
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const {
    return *this + o * F_->neg(1);
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    if (exact_zero_ || o.exact_zero_) return zero(*F_);
    long v = v_ + o.v_;
    long end = std::min(known_until() + o.v_, o.known_until() + v_);
    if (end <= v) throw PrecisionError("series product with empty window");
    std::vector<FieldElem> c(static_cast<size_t>(end - v), 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        long ei = v_ + static_cast<long>(i);
        for (size_t j = 0; j < o.c_.size(); ++j) {
            long e = ei + o.v_ + static_cast<long>(j);
            if (e >= end) break;
            c[static_cast<size_t>(e - v)] =
                F_->add(c[static_cast<size_t>(e - v)], F_->mul(c_[i], o.c_[j]));
        }
    }
    return LaurentSeries(*F_, v, std::move(c));
}

LaurentSeries LaurentSeries::operator*(FieldElem s) const {
    if (exact_zero_) return *this;
    if (s == 0) {
        // scaling by zero keeps only the precision information
        std::vector<FieldElem> c(c_.size(), 0);
        return LaurentSeries(*F_, v_, std::move(c));
    }
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = F_->mul(x, s);
    return r;
}

LaurentSeries LaurentSeries::shifted(long k) const {
    if (exact_zero_) return *this;
    LaurentSeries r = *this;
    r.v_ += k;
    return r;
}

LaurentSeries LaurentSeries::inverse() const {
    if (exact_zero_) throw std::domain_error("inverse of the zero series");
    LaurentSeries a = normalized();
    if (a.c_.empty())
        throw PrecisionError("cannot invert: series is zero to the computed precision");
    size_t n = a.c_.size();
    std::vector<FieldElem> r(n, 0);
    FieldElem lead_inv = F_->inv(a.c_[0]);
    r[0] = lead_inv;
    for (size_t k = 1; k < n; ++k) {
        FieldElem acc = 0;
        for (size_t j = 1; j <= k; ++j) acc = F_->add(acc, F_->mul(a.c_[j], r[k - j]));
        r[k] = F_->neg(F_->mul(acc, lead_inv));
    }
    return LaurentSeries(*F_, -a.v_, std::move(r));
}

LaurentSeries LaurentSeries::power(long k) const {
    if (k == 0) {
        long prec = exact_zero_ ? kWidePrec : static_cast<long>(normalized().c_.size());
        return constant(*F_, 1, std::max(prec, 1L));
    }
    LaurentSeries base = k < 0 ? inverse() : *this;
    long e = k < 0 ? -k : k;
    LaurentSeries acc = base;
    for (long i = 1; i < e; ++i) acc = acc * base;
    return acc;
}

LaurentSeries LaurentSeries::truncated(long abs_end) const {
    if (exact_zero_) return *this;
    if (abs_end >= known_until()) return *this;
    if (abs_end <= v_) throw PrecisionError("truncation empties the window");
    LaurentSeries r = *this;
    r.c_.resize(static_cast<size_t>(abs_end - v_));
    return r;
}

LaurentSeries LaurentSeries::mapped(const Embedding& emb) const {
    if (F_ != emb.sub) throw std::invalid_argument("embedding does not match series field");
    if (exact_zero_) return zero(*emb.sup);
    std::vector<FieldElem> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = emb(c_[i]);
    return LaurentSeries(*emb.sup, v_, std::move(c));
}

LaurentSeries LaurentSeries::compose(const LaurentSeries& T) const {
    if (exact_zero_) return zero(*F_);
    LaurentSeries inner = T.is_exact_zero() ? T : T.normalized();
    if (!inner.is_exact_zero() && inner.valuation() < 1)
        throw std::invalid_argument("composition needs inner valuation >= 1");
    LaurentSeries a = normalized();
    if (a.c_.empty()) throw PrecisionError("composing a zero-window series");
    if (inner.is_exact_zero()) {
        if (a.v_ < 0) throw std::domain_error("pole evaluated at zero series");
        return constant(*F_, a.v_ == 0 ? a.c_[0] : 0, kWidePrec);
    }
    // Horner on the known window, then shift by T^v
    LaurentSeries acc = constant(*F_, a.c_.back(), static_cast<long>(a.c_.size()));
    for (size_t i = a.c_.size() - 1; i-- > 0;) {
        LaurentSeries term = acc * inner;
        acc = term + constant(*F_, a.c_[i], std::max(term.known_until(), 1L));
    }
    if (a.v_ == 0) return acc;
    return acc * inner.power(a.v_);
}

std::string LaurentSeries::str(const std::string& var) const {
    if (exact_zero_) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        long e = v_ + static_cast<long>(i);
        if (!first) os << " + ";
        first = false;
        if (e == 0 || c_[i] != 1) os << c_[i];
        if (e != 0) {
            if (c_[i] != 1) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << known_until() << ")";
    return os.str();
}

LaurentSeries series_reversion(const LaurentSeries& s, int want_len) {
    LaurentSeries sn = s.normalized();
    if (sn.is_exact_zero() || sn.valuation() != 1)
        throw std::invalid_argument("reversion needs valuation exactly 1");
    const FieldCtx& F = s.field();
    long have = sn.known_until() - 1;  // relative precision of s
    int N = static_cast<int>(std::min<long>(want_len, have));
    if (N < 1) throw PrecisionError("reversion: input series too short");
    FieldElem s1_inv = F.inv(sn.coeff(1));

    // t(s) = sum a_k s^k solved triangularly: the s^{L+1} coefficient of
    // s(t_partial) is killed by a_{L+1} = -delta / s1
    std::vector<FieldElem> a(static_cast<size_t>(N) + 1, 0);
    a[1] = s1_inv;
    for (int L = 1; L < N; ++L) {
        // t_partial is an exact polynomial in s; pad with exact zeros so the
        // composition window reaches s^{L+1}
        std::vector<FieldElem> cur(a.begin() + 1, a.begin() + L + 1);
        cur.resize(static_cast<size_t>(N) + 1, 0);
        LaurentSeries tL(F, 1, std::move(cur));
        LaurentSeries comp = sn.truncated(N + 2).compose(tL);
        FieldElem delta = comp.coeff(L + 1);
        a[static_cast<size_t>(L) + 1] = F.neg(F.mul(delta, s1_inv));
    }
    std::vector<FieldElem> out(a.begin() + 1, a.end());
    return LaurentSeries(F, 1, std::move(out));
}

}  // namespace isodual
