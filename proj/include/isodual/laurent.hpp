#pragma once

#include <optional>
#include <vector>

#include "isodual/gf.hpp"

namespace isodual {

// Truncated Laurent series sum c[i] t^(v+i) + O(t^(v+c.size())) over one
// FieldCtx.  Coefficients inside the window are exact; everything below v is
// exactly zero.  exact_zero marks the zero series (infinite precision).
class LaurentSeries {
  public:
    LaurentSeries() = default;
    static LaurentSeries zero(const FieldCtx& F);
    // c nonempty; window starts at v
    LaurentSeries(const FieldCtx& F, long v, std::vector<FieldElem> c);
    static LaurentSeries constant(const FieldCtx& F, FieldElem a, long prec);
    static LaurentSeries monomial(const FieldCtx& F, FieldElem a, long e, long prec);

    const FieldCtx& field() const { return *F_; }
    bool is_exact_zero() const { return exact_zero_; }
    // first unknown exponent; huge for the exact zero
    long known_until() const;
    long window_start() const { return v_; }

    // exact valuation: strips leading zeros; nullopt when every known
    // coefficient is zero but the tail is unknown (insufficient precision)
    std::optional<long> try_valuation() const;
    long valuation() const;  // throws PrecisionError / domain_error on zero

    // coefficient of t^e; throws PrecisionError when e is beyond the window
    FieldElem coeff(long e) const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator*(FieldElem s) const;
    LaurentSeries shifted(long k) const;  // * t^k
    LaurentSeries inverse() const;        // needs an exact leading coefficient
    LaurentSeries operator/(const LaurentSeries& o) const { return *this * o.inverse(); }
    LaurentSeries power(long k) const;
    LaurentSeries truncated(long abs_end) const;
    // q-power Frobenius applied coefficientwise with exponents scaled is NOT
    // what we need; this is the plain coefficient map through an embedding
    LaurentSeries mapped(const Embedding& emb) const;

    // substitute: this(T); T must have valuation >= 1 (or be exactly zero
    // when *this has no negative part)
    LaurentSeries compose(const LaurentSeries& T) const;

    LaurentSeries normalized() const;  // strips leading zeros inside the window

    std::string str(const std::string& var = "t") const;

  private:
    const FieldCtx* F_ = nullptr;
    long v_ = 0;
    std::vector<FieldElem> c_;
    bool exact_zero_ = true;
};

// compositional inverse of s (valuation exactly 1): returns t(s) with
// s(t(s)) = s, window [1, 1 + want_len)
LaurentSeries series_reversion(const LaurentSeries& s, int want_len);

}  // namespace isodual
