#pragma once

#include "isodual/places.hpp"

namespace isodual {

// Defining relation of one tower step above the rational function field:
// g^m + g = u with u in F_q(x) and m = step degree (the additive form all
// shipped towers normalize to).
struct StepRelation {
    int m = 0;
    RatFun u;
    const FieldCtx& field() const { return u.field(); }
};

// Element of the level-1 function field written on the power basis
// 1, g, ..., g^(m-1) with coefficients in F_q(x).  The representation is
// unique, so equality and zero tests are exact.
class FunctionRep {
  public:
    FunctionRep() = default;
    FunctionRep(const StepRelation& rel, std::vector<RatFun> coeffs);

    static FunctionRep zero(const StepRelation& rel);
    static FunctionRep one(const StepRelation& rel);
    static FunctionRep generator(const StepRelation& rel);
    static FunctionRep from_base(const StepRelation& rel, RatFun f);
    static FunctionRep constant(const StepRelation& rel, FieldElem c);

    const StepRelation& relation() const;
    int step_degree() const { return rel_->m; }
    const RatFun& coef(int j) const { return c_.at(j); }
    const std::vector<RatFun>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_base() const;  // lies in F_q(x)

    FunctionRep operator+(const FunctionRep& o) const;
    FunctionRep operator-(const FunctionRep& o) const;
    FunctionRep operator*(const FunctionRep& o) const;
    FunctionRep operator*(const RatFun& s) const;
    FunctionRep scaled(FieldElem s) const;
    FunctionRep inverse() const;
    FunctionRep power(long k) const;
    bool operator==(const FunctionRep& o) const;
    bool operator!=(const FunctionRep& o) const { return !(*this == o); }

    std::string str() const;

  private:
    const StepRelation* rel_ = nullptr;
    std::vector<RatFun> c_;
    void check_compatible(const FunctionRep& o) const;
};

// evaluate a constant-coefficient polynomial (in the step variable) at a
// FunctionRep argument
FunctionRep eval_poly_at(const Poly& p, const FunctionRep& arg);

// solve A x = b over the rational function field (small dense systems)
std::vector<RatFun> solve_ratfun_system(std::vector<std::vector<RatFun>> A, std::vector<RatFun> b);

}  // namespace isodual
