#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isodual/laurent.hpp"
#include "isodual/linalg.hpp"

namespace isodual {

// Place of the rational function field F_q(x): either the infinite place or
// the zero set of a monic irreducible polynomial.
class Place {
  public:
    static Place infinity(const FieldCtx& F);
    static Place finite(Poly h);  // monic irreducible (verified)
    static Place rational(const FieldCtx& F, FieldElem alpha);  // zero of x - alpha

    bool is_infinity() const { return infinite_; }
    const Poly& poly() const;
    // alpha for a degree-1 finite place
    FieldElem alpha() const;
    int degree() const;
    const FieldCtx& field() const { return *F_; }

    bool operator==(const Place& o) const;
    bool operator!=(const Place& o) const { return !(*this == o); }
    bool operator<(const Place& o) const;  // infinity first, then by (deg, coeffs)

    std::string str() const;

  private:
    const FieldCtx* F_ = nullptr;
    bool infinite_ = false;
    Poly h_;
};

// the q + 1 rational places: P_inf then P_alpha by ascending encoding
std::vector<Place> rational_places(const FieldCtx& F);

// Rational function in reduced form: gcd(num, den) = 1 and den monic.
class RatFun {
  public:
    RatFun() = default;
    RatFun(Poly num, Poly den);
    explicit RatFun(Poly num);
    static RatFun zero(const FieldCtx& F) { return RatFun(Poly::zero(F)); }
    static RatFun one(const FieldCtx& F) { return RatFun(Poly::one(F)); }
    static RatFun x(const FieldCtx& F) { return RatFun(Poly::x(F)); }
    static RatFun constant(const FieldCtx& F, FieldElem c) { return RatFun(Poly::constant(F, c)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FieldCtx& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }

    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun operator*(FieldElem s) const;
    RatFun inverse() const;
    RatFun power(long k) const;
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    // nu_P(f); throws domain_error on the zero function
    long valuation(const Place& P) const;
    // residue-class evaluation at a degree-1 place (finite or infinite);
    // throws domain_error on a pole
    FieldElem evaluate(const Place& P) const;
    // residue in K through emb (F_q -> K) at theta, for higher-degree places
    FieldElem evaluate_embedded(const Embedding& emb, FieldElem theta) const;

    std::string str() const;

  private:
    Poly num_, den_;
    void reduce();
};

// ---------------------------------------------------------------------------
// Places at tower level i are identified by a base place and the chain of
// branch tags selected at each step up the tower.

struct BranchTag {
    enum class Kind { Ram = 0, Root = 1, Factor = 2 };
    Kind kind = Kind::Ram;
    FieldElem root = 0;              // Kind::Root: fiber root in the parent residue field
    std::vector<FieldElem> factor;   // Kind::Factor: monic irreducible fiber factor

    static BranchTag ram() { return BranchTag{}; }
    static BranchTag of_root(FieldElem r);
    static BranchTag of_factor(std::vector<FieldElem> coeffs);

    int rel_degree() const;
    bool operator==(const BranchTag& o) const;
    bool operator<(const BranchTag& o) const;
    std::string str() const;
};

struct PlaceKey {
    Place base;
    std::vector<BranchTag> chain;

    PlaceKey() = default;
    explicit PlaceKey(Place b) : base(std::move(b)) {}
    PlaceKey(Place b, std::vector<BranchTag> c) : base(std::move(b)), chain(std::move(c)) {}

    int level() const { return static_cast<int>(chain.size()); }
    int degree() const;
    PlaceKey parent() const;  // one level down
    PlaceKey child(BranchTag t) const;

    bool operator==(const PlaceKey& o) const { return base == o.base && chain == o.chain; }
    bool operator!=(const PlaceKey& o) const { return !(*this == o); }
    bool operator<(const PlaceKey& o) const;
    std::string str() const;
};

// Finite formal integer combination of places at one tower level.
class Divisor {
  public:
    Divisor() = default;
    explicit Divisor(int level) : level_(level) {}
    static Divisor of(const PlaceKey& P, long long coeff = 1);
    static Divisor of(const Place& P, long long coeff = 1);  // level 0

    int level() const { return level_; }
    const std::map<PlaceKey, long long>& entries() const { return entries_; }
    long long coeff(const PlaceKey& P) const;
    bool is_zero() const { return entries_.empty(); }

    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor scaled(long long k) const;
    bool operator==(const Divisor& o) const;

    long long degree() const;
    std::vector<PlaceKey> support() const;
    bool disjoint_from(const Divisor& o) const;
    bool ge(const Divisor& o) const;  // coefficientwise >=

    Divisor positive_part() const;
    Divisor negative_part() const;  // as a nonnegative divisor

    void set(const PlaceKey& P, long long c);  // drops zero entries
    std::string str() const;

  private:
    int level_ = 0;
    std::map<PlaceKey, long long> entries_;
    void check_level(const Divisor& o) const;
};

// ---------------------------------------------------------------------------
// Local expansions on the rational function field (level 0)

// Expansion context at a level-0 place: uniformizer t is x - alpha (finite
// degree 1), the place polynomial h (higher degree, via Newton root lift in
// the residue field), or 1/x at infinity.
class Level0Expansion {
  public:
    Level0Expansion(const Place& P);
    const Place& place() const { return P_; }
    const FieldCtx& residue_field() const { return *K_; }
    const Embedding& const_embedding() const { return *emb_; }
    FieldElem theta() const { return theta_; }  // residue of x at a finite place

    // series for x in the local uniformizer, window length >= len from its valuation
    LaurentSeries x_series(int len) const;
    LaurentSeries expand(const RatFun& f, int len) const;

  private:
    Place P_;
    const FieldCtx* K_;
    const Embedding* emb_;
    FieldElem theta_ = 0;
};

// genus-0 Riemann-Roch space L(G) on F_q(x); G at level 0.  Returns the
// canonical echelonized basis; empty when deg G < 0.
std::vector<RatFun> rr_basis_genus0(const FieldCtx& F, const Divisor& G);

// principal divisor of f on F_q(x) (finite places via factorization + P_inf)
Divisor principal_divisor_genus0(const RatFun& f);

}  // namespace isodual
