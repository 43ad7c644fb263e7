#include "isodual/places.hpp"

#include <algorithm>
#include <sstream>

namespace isodual {

// ---------------------------------------------------------------------------
// Place

Place Place::infinity(const FieldCtx& F) {
    Place P;
    P.F_ = &F;
    P.infinite_ = true;
    P.h_ = Poly::zero(F);
    return P;
}

Place Place::finite(Poly h) {
    if (h.deg() < 1) throw std::invalid_argument("finite place needs a nonconstant polynomial");
    if (!h.is_monic()) throw std::invalid_argument("finite place polynomial must be monic");
    if (!poly_irreducible(h)) throw std::invalid_argument("finite place polynomial must be irreducible");
    Place P;
    P.F_ = &h.field();
    P.infinite_ = false;
    P.h_ = std::move(h);
    return P;
}

Place Place::rational(const FieldCtx& F, FieldElem alpha) {
    return finite(Poly(F, {F.neg(alpha), 1}));
}

const Poly& Place::poly() const {
    if (infinite_) throw std::logic_error("infinite place has no polynomial");
    return h_;
}

FieldElem Place::alpha() const {
    if (infinite_ || h_.deg() != 1) throw std::logic_error("not a degree-1 finite place");
    return F_->neg(h_.coeff(0));
}

int Place::degree() const { return infinite_ ? 1 : h_.deg(); }

bool Place::operator==(const Place& o) const {
    return F_ == o.F_ && infinite_ == o.infinite_ && h_ == o.h_;
}

bool Place::operator<(const Place& o) const {
    if (infinite_ != o.infinite_) return infinite_;  // infinity first
    return h_ < o.h_;
}

std::string Place::str() const {
    if (infinite_) return "P_inf";
    if (h_.deg() == 1) return "P_" + std::to_string(alpha());
    return "P[" + h_.str() + "]";
}

std::vector<Place> rational_places(const FieldCtx& F) {
    std::vector<Place> out;
    out.push_back(Place::infinity(F));
    for (FieldElem a = 0; a < F.q; ++a) out.push_back(Place::rational(F, a));
    return out;
}

// ---------------------------------------------------------------------------
// RatFun

void RatFun::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::one(den_.field());
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.deg() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    FieldElem lc = den_.lc();
    if (lc != 1) {
        FieldElem inv = den_.field().inv(lc);
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    reduce();
}

RatFun::RatFun(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw std::domain_error("division by the zero function");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::operator*(FieldElem s) const { return RatFun(num_ * s, den_); }

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of the zero function");
    return RatFun(den_, num_);
}

RatFun RatFun::power(long k) const {
    const FieldCtx& F = field();
    if (k == 0) return one(F);
    RatFun base = k < 0 ? inverse() : *this;
    long e = k < 0 ? -k : k;
    RatFun acc = base;
    for (long i = 1; i < e; ++i) acc = acc * base;
    return acc;
}

long RatFun::valuation(const Place& P) const {
    if (is_zero()) throw std::domain_error("valuation of the zero function is undefined");
    if (P.is_infinity()) return den_.deg() - num_.deg();
    return num_.multiplicity(P.poly()) - den_.multiplicity(P.poly());
}

FieldElem RatFun::evaluate(const Place& P) const {
    const FieldCtx& F = field();
    if (is_zero()) return 0;
    if (P.is_infinity()) {
        if (num_.deg() > den_.deg()) throw std::domain_error("pole at P_inf");
        if (num_.deg() < den_.deg()) return 0;
        return F.div(num_.lc(), den_.lc());
    }
    if (P.degree() != 1) throw std::invalid_argument("evaluate: place must have degree 1");
    FieldElem a = P.alpha();
    FieldElem d = den_.eval(a);
    if (d == 0) throw std::domain_error("pole at " + P.str());
    return F.div(num_.eval(a), d);
}

FieldElem RatFun::evaluate_embedded(const Embedding& emb, FieldElem theta) const {
    const FieldCtx& K = *emb.sup;
    FieldElem n = map_poly(emb, num_).eval(theta);
    FieldElem d = map_poly(emb, den_).eval(theta);
    if (d == 0) throw std::domain_error("pole at embedded evaluation point");
    return K.div(n, d);
}

std::string RatFun::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// BranchTag / PlaceKey

BranchTag BranchTag::of_root(FieldElem r) {
    BranchTag t;
    t.kind = Kind::Root;
    t.root = r;
    return t;
}

BranchTag BranchTag::of_factor(std::vector<FieldElem> coeffs) {
    BranchTag t;
    t.kind = Kind::Factor;
    t.factor = std::move(coeffs);
    return t;
}

int BranchTag::rel_degree() const {
    return kind == Kind::Factor ? static_cast<int>(factor.size()) - 1 : 1;
}

bool BranchTag::operator==(const BranchTag& o) const {
    return kind == o.kind && root == o.root && factor == o.factor;
}

bool BranchTag::operator<(const BranchTag& o) const {
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    if (root != o.root) return root < o.root;
    return factor < o.factor;
}

std::string BranchTag::str() const {
    switch (kind) {
        case Kind::Ram: return "ram";
        case Kind::Root: return "root:" + std::to_string(root);
        default: {
            std::string s = "factor:[";
            for (size_t i = 0; i < factor.size(); ++i)
                s += (i ? "," : "") + std::to_string(factor[i]);
            return s + "]";
        }
    }
}

int PlaceKey::degree() const {
    int d = base.degree();
    for (const auto& t : chain) d *= t.rel_degree();
    return d;
}

PlaceKey PlaceKey::parent() const {
    if (chain.empty()) throw std::logic_error("level-0 place has no parent");
    PlaceKey p = *this;
    p.chain.pop_back();
    return p;
}

PlaceKey PlaceKey::child(BranchTag t) const {
    PlaceKey c = *this;
    c.chain.push_back(std::move(t));
    return c;
}

bool PlaceKey::operator<(const PlaceKey& o) const {
    if (!(base == o.base)) return base < o.base;
    return chain < o.chain;
}

std::string PlaceKey::str() const {
    std::string s = base.str();
    for (const auto& t : chain) s += "/" + t.str();
    return s;
}

// ---------------------------------------------------------------------------
// Divisor

Divisor Divisor::of(const PlaceKey& P, long long coeff) {
    Divisor d(P.level());
    d.set(P, coeff);
    return d;
}

Divisor Divisor::of(const Place& P, long long coeff) { return of(PlaceKey(P), coeff); }

long long Divisor::coeff(const PlaceKey& P) const {
    auto it = entries_.find(P);
    return it == entries_.end() ? 0 : it->second;
}

void Divisor::check_level(const Divisor& o) const {
    if (level_ != o.level_)
        throw std::invalid_argument("divisor level mismatch: " + std::to_string(level_) + " vs " +
                                    std::to_string(o.level_));
}

Divisor Divisor::operator+(const Divisor& o) const {
    check_level(o);
    Divisor r = *this;
    for (const auto& [P, c] : o.entries_) r.set(P, r.coeff(P) + c);
    return r;
}

Divisor Divisor::operator-(const Divisor& o) const { return *this + o.scaled(-1); }

Divisor Divisor::scaled(long long k) const {
    Divisor r(level_);
    if (k == 0) return r;
    for (const auto& [P, c] : entries_) r.set(P, c * k);
    return r;
}

bool Divisor::operator==(const Divisor& o) const {
    return level_ == o.level_ && entries_ == o.entries_;
}

long long Divisor::degree() const {
    long long d = 0;
    for (const auto& [P, c] : entries_) d += c * P.degree();
    return d;
}

std::vector<PlaceKey> Divisor::support() const {
    std::vector<PlaceKey> s;
    s.reserve(entries_.size());
    for (const auto& [P, c] : entries_) s.push_back(P);
    return s;
}

bool Divisor::disjoint_from(const Divisor& o) const {
    check_level(o);
    for (const auto& [P, c] : entries_)
        if (o.entries_.count(P)) return false;
    return true;
}

bool Divisor::ge(const Divisor& o) const {
    check_level(o);
    for (const auto& [P, c] : entries_)
        if (c < o.coeff(P)) return false;
    for (const auto& [P, c] : o.entries_)
        if (coeff(P) < c) return false;
    return true;
}

Divisor Divisor::positive_part() const {
    Divisor r(level_);
    for (const auto& [P, c] : entries_)
        if (c > 0) r.set(P, c);
    return r;
}

Divisor Divisor::negative_part() const {
    Divisor r(level_);
    for (const auto& [P, c] : entries_)
        if (c < 0) r.set(P, -c);
    return r;
}

void Divisor::set(const PlaceKey& P, long long c) {
    if (P.level() != level_)
        throw std::invalid_argument("place level does not match divisor level");
    if (c == 0)
        entries_.erase(P);
    else
        entries_[P] = c;
}

std::string Divisor::str() const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [P, c] : entries_) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c << "*";
        os << P.str();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Level0Expansion

Level0Expansion::Level0Expansion(const Place& P) : P_(P) {
    const FieldCtx& F = P.field();
    if (P.is_infinity() || P.degree() == 1) {
        K_ = &F;
        emb_ = &Embedding::get(F, F);
        theta_ = P.is_infinity() ? 0 : P.alpha();
    } else {
        int r = P.degree();
        if (!field_supported(F.p, F.m * r))
            throw ConfigError("residue field F_" + std::to_string(F.p) + "^" +
                              std::to_string(F.m * r) + " is outside the modulus table");
        K_ = &field_make(F.p, F.m * r);
        emb_ = &Embedding::get(F, *K_);
        // canonical root of the place polynomial: smallest encoding
        Poly hk = map_poly(*emb_, P.poly());
        FieldElem best = -1;
        for (FieldElem a = 0; a < K_->q; ++a)
            if (hk.eval(a) == 0) {
                best = a;
                break;
            }
        if (best < 0) throw std::logic_error("place polynomial has no root in residue field");
        theta_ = best;
    }
}

LaurentSeries Level0Expansion::x_series(int len) const {
    const FieldCtx& K = *K_;
    if (P_.is_infinity()) {
        std::vector<FieldElem> c(static_cast<size_t>(len) + 2, 0);
        c[0] = 1;
        return LaurentSeries(K, -1, std::move(c));  // x = 1/t exactly
    }
    if (P_.degree() == 1) {
        std::vector<FieldElem> c(static_cast<size_t>(len) + 2, 0);
        c[0] = theta_;
        c[1] = 1;
        return LaurentSeries(K, 0, std::move(c));  // x = alpha + t exactly
    }
    // Newton: solve h(x(t)) = t with x(0) = theta
    Poly hk = map_poly(*emb_, P_.poly());
    Poly hk_d = hk.derivative();
    LaurentSeries x = LaurentSeries::constant(K, theta_, len);
    LaurentSeries t = LaurentSeries::monomial(K, 1, 1, len);
    auto eval_poly = [&](const Poly& p, const LaurentSeries& at) {
        LaurentSeries acc = LaurentSeries::constant(K, p.coeff(p.deg()), len + 2);
        for (int i = p.deg() - 1; i >= 0; --i)
            acc = (acc * at + LaurentSeries::constant(K, p.coeff(i), len + 2)).truncated(len + 1);
        return acc;
    };
    for (int it = 0; it < len + 2; ++it) {
        LaurentSeries fx = eval_poly(hk, x) - t;
        if (fx.try_valuation().value_or(len + 1) > len) break;
        LaurentSeries corr = fx / eval_poly(hk_d, x);
        x = (x - corr).truncated(len + 1);
    }
    return x;
}

LaurentSeries Level0Expansion::expand(const RatFun& f, int len) const {
    if (f.is_zero()) return LaurentSeries::zero(*K_);
    const FieldCtx& K = *K_;
    int slack = f.num().deg() + f.den().deg() + 4;
    LaurentSeries x = x_series(len + slack);
    auto eval_poly = [&](const Poly& p) {
        Poly pk = map_poly(*emb_, p);
        LaurentSeries acc = LaurentSeries::constant(K, pk.coeff(pk.deg()), len + slack);
        for (int i = pk.deg() - 1; i >= 0; --i)
            acc = acc * x + LaurentSeries::constant(K, pk.coeff(i), len + slack);
        return acc;
    };
    return eval_poly(f.num()) / eval_poly(f.den());
}

// ---------------------------------------------------------------------------
// genus-0 Riemann-Roch

namespace {

// the partial-fraction basis of L(G) for an effective-plus-infinity divisor
std::vector<RatFun> positive_part_basis(const FieldCtx& F, const Divisor& G) {
    std::vector<RatFun> basis;
    long long a_inf = 0;
    for (const auto& [P, c] : G.entries()) {
        if (P.base.is_infinity()) a_inf = c;
    }
    for (long long i = 0; i <= a_inf; ++i) basis.push_back(RatFun(Poly::x(F)).power(i));
    for (const auto& [P, c] : G.entries()) {
        if (P.base.is_infinity() || c <= 0) continue;
        RatFun hinv = RatFun(P.base.poly()).inverse();
        for (long long b = 1; b <= c; ++b) {
            RatFun hb = hinv.power(b);
            for (int i = 0; i < P.base.degree(); ++i)
                basis.push_back(hb * RatFun(Poly::x(F)).power(i));
        }
    }
    return basis;
}

}  // namespace

std::vector<RatFun> rr_basis_genus0(const FieldCtx& F, const Divisor& G) {
    if (G.level() != 0) throw std::invalid_argument("rr_basis_genus0 expects a level-0 divisor");
    if (G.degree() < 0) return {};
    Divisor pos = G.positive_part();
    std::vector<RatFun> cand = positive_part_basis(F, pos);
    Divisor neg = G.negative_part();

    if (neg.is_zero()) {
        if ((long long)cand.size() != G.degree() + 1)
            throw InconsistencyError("genus-0 Riemann-Roch dimension certificate failed");
        return cand;
    }

    // impose vanishing conditions from the negative part via local expansions
    Matrix rows;
    for (const auto& [P, c] : neg.entries()) {
        long long b = c;  // required zero order at P
        Level0Expansion ex(P.base);
        const FieldCtx& K = ex.residue_field();
        SubfieldCoords coords(K, ex.const_embedding(),
                              P.base.is_infinity() || P.base.degree() == 1 ? 1 : ex.theta(),
                              P.base.degree());
        std::vector<LaurentSeries> expansions;
        for (const auto& f : cand) expansions.push_back(ex.expand(f, (int)b + 2));
        for (long long order = 0; order < b; ++order) {
            for (int comp = 0; comp < P.base.degree(); ++comp) {
                Row row(cand.size(), 0);
                for (size_t j = 0; j < cand.size(); ++j) {
                    FieldElem v = expansions[j].is_exact_zero() ? 0 : expansions[j].coeff(order);
                    row[j] = coords.coords(v)[comp];
                }
                rows.push_back(std::move(row));
            }
        }
    }
    Matrix combos = nullspace(rows, (int)cand.size(), F);
    // canonical echelon form of the solution space
    rref(combos, F);
    std::vector<RatFun> out;
    for (const auto& v : combos) {
        RatFun f = RatFun::zero(F);
        for (size_t j = 0; j < cand.size(); ++j)
            if (v[j] != 0) f = f + cand[j] * v[j];
        out.push_back(f);
    }
    if ((long long)out.size() != G.degree() + 1)
        throw InconsistencyError("genus-0 Riemann-Roch dimension certificate failed");
    return out;
}

Divisor principal_divisor_genus0(const RatFun& f) {
    if (f.is_zero()) throw std::domain_error("principal divisor of the zero function");
    Divisor d(0);
    auto add_poly = [&](const Poly& p, int sign) {
        if (p.deg() < 1) return;
        for (const auto& [g, mult] : poly_factor(p).factors)
            d.set(PlaceKey(Place::finite(g)), d.coeff(PlaceKey(Place::finite(g))) + sign * mult);
    };
    add_poly(f.num(), 1);
    add_poly(f.den(), -1);
    Place inf = Place::infinity(f.field());
    long vinf = f.valuation(inf);
    if (vinf != 0) d.set(PlaceKey(inf), vinf);
    return d;
}

}  // namespace isodual
