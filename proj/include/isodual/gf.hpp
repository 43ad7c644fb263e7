#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "isodual/errors.hpp"

namespace isodual {

// Element of a finite field in integer encoding: the little-endian base-p
// digit vector of its polynomial-basis coefficients.
using FieldElem = int;

// Arithmetic context for F_{p^m}, q = p^m <= 256.  Moduli come from a fixed
// built-in table so that matrices are reproducible bit-for-bit across runs.
// Instances are immutable after construction and shared through field_make().
class FieldCtx {
  public:
    int p = 0;
    int m = 0;
    int q = 0;
    std::vector<int> modulus;  // little-endian, length m+1, monic

    FieldElem add(FieldElem a, FieldElem b) const { return add_[idx(a, b)]; }
    FieldElem sub(FieldElem a, FieldElem b) const { return add_[idx(a, neg_[check(b)])]; }
    FieldElem neg(FieldElem a) const { return neg_[check(a)]; }
    FieldElem mul(FieldElem a, FieldElem b) const { return mul_[idx(a, b)]; }
    FieldElem inv(FieldElem a) const;
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
    // a^e for e >= 0; exponent is reduced mod q-1 for nonzero a.
    FieldElem pow(FieldElem a, long long e) const;
    // Frobenius a^(p^k)
    FieldElem frob(FieldElem a, int k = 1) const;
    // sum of the Frobenius orbit over F_{p^sub_degree}; lands in that subfield.
    FieldElem trace_to_sub(FieldElem a, int sub_degree) const;
    FieldElem trace(FieldElem a) const { return trace_to_sub(a, 1); }

    bool is_zero(FieldElem a) const { return check(a) == 0; }
    std::vector<FieldElem> enumerate() const;

    std::string name() const;  // e.g. "F8"

    bool operator==(const FieldCtx& o) const { return p == o.p && m == o.m; }

  private:
    std::vector<FieldElem> add_, mul_, neg_, inv_;
    int check(FieldElem a) const;
    int idx(FieldElem a, FieldElem b) const { return check(a) * q + check(b); }
    void build_tables();
    friend const FieldCtx& field_make(int p, int m);
};

// Returns the shared context for F_{p^m}.  Throws ConfigError when (p, m) is
// not in the built-in modulus table.  The modulus is re-verified irreducible
// at first construction.
const FieldCtx& field_make(int p, int m);

// true when (p, m) has a table entry
bool field_supported(int p, int m);

// Canonical embedding F_{p^a} -> F_{p^b} for a | b: the base-field generator
// maps to the smallest root (in integer encoding) of the subfield modulus in
// the big field.  Cached per (sub, sup) pair.
class Embedding {
  public:
    const FieldCtx* sub = nullptr;
    const FieldCtx* sup = nullptr;

    FieldElem operator()(FieldElem a) const { return fwd_[a]; }
    // inverse image; throws std::invalid_argument when a is outside the subfield
    FieldElem pull_back(FieldElem a) const;
    bool in_subfield(FieldElem a) const { return back_[a] >= 0; }

    static const Embedding& get(const FieldCtx& sub, const FieldCtx& sup);

  private:
    std::vector<FieldElem> fwd_;   // size sub->q
    std::vector<FieldElem> back_;  // size sup->q, -1 when not hit
};

// ---------------------------------------------------------------------------
// Univariate polynomials over one FieldCtx, little-endian coefficients with
// the invariant that the top coefficient is nonzero (zero polynomial <-> empty
// coefficient vector, degree -1).

class Poly {
  public:
    Poly() = default;
    explicit Poly(const FieldCtx& F) : F_(&F) {}
    Poly(const FieldCtx& F, std::vector<FieldElem> coeffs);

    static Poly zero(const FieldCtx& F) { return Poly(F); }
    static Poly one(const FieldCtx& F) { return Poly(F, {1}); }
    static Poly constant(const FieldCtx& F, FieldElem c) { return Poly(F, {c}); }
    static Poly x(const FieldCtx& F) { return Poly(F, {0, 1}); }

    const FieldCtx& field() const;
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    FieldElem coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : 0; }
    FieldElem lc() const;  // leading coefficient; 0 for the zero polynomial
    const std::vector<FieldElem>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(FieldElem s) const;
    Poly shifted(int k) const;  // * x^k, k >= 0
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const;  // by (degree, coeff vector), for canonical orderings

    // division with remainder; throws on zero divisor
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    bool divides(const Poly& other) const;  // *this | other

    Poly monic() const;
    Poly derivative() const;
    FieldElem eval(FieldElem a) const;

    // multiplicity of d as a factor (d nonconstant)
    int multiplicity(const Poly& d) const;

    std::string str(const std::string& var = "x") const;

  private:
    const FieldCtx* F_ = nullptr;
    std::vector<FieldElem> c_;
    void normalize();
};

Poly poly_gcd(const Poly& a, const Poly& b);  // monic gcd
Poly poly_pow_mod(const Poly& base, long long e, const Poly& mod);
// maps coefficients through an embedding
Poly map_poly(const Embedding& emb, const Poly& f);

// all roots in the coefficient field, ascending encoding
std::vector<FieldElem> poly_roots(const Poly& f);

// Irreducibility certificate: no roots for deg <= 3, distinct-degree gcd
// screening for higher degree.
bool poly_irreducible(const Poly& f);

// Full factorization into monic irreducibles with multiplicities, plus the
// leading unit.  Squarefree decomposition, then distinct-degree splitting via
// x^{q^i} - x gcds, then seeded Cantor-Zassenhaus equal-degree splitting.
// Deterministic: the internal RNG seed is fixed.
struct Factorization {
    FieldElem unit = 1;
    std::vector<std::pair<Poly, int>> factors;  // monic irreducible, multiplicity; sorted
};
Factorization poly_factor(const Poly& f);

}  // namespace isodual
