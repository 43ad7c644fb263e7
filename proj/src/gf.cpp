#include "isodual/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

namespace isodual {

namespace {

// Built-in modulus table (little-endian).  Exactly the fields the shipped
// towers touch: constant fields F4, F8, F9, F16 and the residue fields their
// depth-2 analyses produce (F64, F81, F256), plus the primes.  Anything else,
// e.g. (2,5), is a configuration error.
const std::map<std::pair<int, int>, std::vector<int>>& modulus_table() {
    static const std::map<std::pair<int, int>, std::vector<int>> t = {
        {{2, 1}, {0, 1}},
        {{2, 2}, {1, 1, 1}},                    // w^2+w+1
        {{2, 3}, {1, 1, 0, 1}},                 // w^3+w+1
        {{2, 4}, {1, 1, 0, 0, 1}},              // w^4+w+1
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},        // w^6+w^4+w^3+w+1
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},  // w^8+w^4+w^3+w^2+1
        {{3, 1}, {0, 1}},
        {{3, 2}, {1, 0, 1}},                    // w^2+1
        {{3, 4}, {2, 0, 0, 2, 1}},              // w^4+2w^3+2
        {{5, 1}, {0, 1}},
        {{7, 1}, {0, 1}},
    };
    return t;
}

// digit-vector arithmetic mod p used only to bootstrap the tables
std::vector<int> digit_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                               const std::vector<int>& mod, int p) {
    int m = static_cast<int>(mod.size()) - 1;
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // reduce by the monic modulus
    for (int d = static_cast<int>(prod.size()) - 1; d >= m; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int k = 0; k < m; ++k) prod[d - m + k] = ((prod[d - m + k] - c * mod[k]) % p + p) % p;
    }
    prod.resize(m > 0 ? m : 1, 0);
    return prod;
}

int digits_to_int(const std::vector<int>& d, int p) {
    int v = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
    return v;
}

std::vector<int> int_to_digits(int v, int p, int m) {
    std::vector<int> d(std::max(m, 1), 0);
    for (int i = 0; i < m; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

}  // namespace

int FieldCtx::check(FieldElem a) const {
    if (a < 0 || a >= q) throw std::invalid_argument("field element out of range for " + name());
    return a;
}

void FieldCtx::build_tables() {
    add_.assign(static_cast<size_t>(q) * q, 0);
    mul_.assign(static_cast<size_t>(q) * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, -1);
    for (int a = 0; a < q; ++a) {
        auto da = int_to_digits(a, p, m);
        std::vector<int> dn(std::max(m, 1), 0);
        for (int i = 0; i < m; ++i) dn[i] = (p - da[i]) % p;
        neg_[a] = digits_to_int(dn, p);
        for (int b = 0; b < q; ++b) {
            auto db = int_to_digits(b, p, m);
            std::vector<int> ds(std::max(m, 1), 0);
            for (int i = 0; i < m; ++i) ds[i] = (da[i] + db[i]) % p;
            add_[static_cast<size_t>(a) * q + b] = digits_to_int(ds, p);
            mul_[static_cast<size_t>(a) * q + b] =
                digits_to_int(digit_mul_mod(da, db, modulus, p), p);
        }
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[static_cast<size_t>(a) * q + b] == 1) {
                inv_[a] = b;
                break;
            }
}

FieldElem FieldCtx::inv(FieldElem a) const {
    if (check(a) == 0) throw std::domain_error("division by zero in " + name());
    return inv_[a];
}

FieldElem FieldCtx::pow(FieldElem a, long long e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    check(a);
    if (e == 0) return 1;
    if (a == 0) return 0;
    e %= (q - 1);
    if (e == 0) return 1;
    FieldElem r = 1, b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

FieldElem FieldCtx::frob(FieldElem a, int k) const {
    FieldElem r = check(a);
    for (int i = 0; i < k; ++i) r = pow(r, p);
    return r;
}

FieldElem FieldCtx::trace_to_sub(FieldElem a, int sub_degree) const {
    if (sub_degree <= 0 || m % sub_degree != 0)
        throw std::invalid_argument("trace: sub_degree must divide extension degree");
    FieldElem acc = 0, t = check(a);
    for (int i = 0; i < m / sub_degree; ++i) {
        acc = add(acc, t);
        t = frob(t, sub_degree);
    }
    return acc;
}

std::vector<FieldElem> FieldCtx::enumerate() const {
    std::vector<FieldElem> all(q);
    for (int i = 0; i < q; ++i) all[i] = i;
    return all;
}

std::string FieldCtx::name() const { return "F" + std::to_string(q); }

bool field_supported(int p, int m) { return modulus_table().count({p, m}) > 0; }

const FieldCtx& field_make(int p, int m) {
    static std::map<std::pair<int, int>, FieldCtx> cache;
    static std::recursive_mutex mtx;
    std::lock_guard<std::recursive_mutex> lock(mtx);
    auto it = cache.find({p, m});
    if (it != cache.end()) return it->second;

    auto mod_it = modulus_table().find({p, m});
    if (mod_it == modulus_table().end())
        throw ConfigError("no modulus table entry for p=" + std::to_string(p) +
                          ", m=" + std::to_string(m));
    if (m > 1) {
        // re-verify the table entry: irreducible over F_p
        const FieldCtx& Fp = field_make(p, 1);
        Poly f(Fp, std::vector<FieldElem>(mod_it->second.begin(), mod_it->second.end()));
        if (!poly_irreducible(f))
            throw ConfigError("modulus table entry for p=" + std::to_string(p) + ", m=" +
                              std::to_string(m) + " is not irreducible");
    }
    FieldCtx F;
    F.p = p;
    F.m = m;
    F.q = 1;
    for (int i = 0; i < m; ++i) F.q *= p;
    F.modulus = mod_it->second;
    F.build_tables();
    return cache.emplace(std::make_pair(p, m), std::move(F)).first->second;
}

FieldElem Embedding::pull_back(FieldElem a) const {
    if (a < 0 || a >= sup->q || back_[a] < 0)
        throw std::invalid_argument("element is not in the subfield " + sub->name());
    return back_[a];
}

const Embedding& Embedding::get(const FieldCtx& sub, const FieldCtx& sup) {
    static std::map<std::pair<const FieldCtx*, const FieldCtx*>, Embedding> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({&sub, &sup});
    if (it != cache.end()) return it->second;

    if (sub.p != sup.p || sup.m % sub.m != 0)
        throw std::invalid_argument("no embedding " + sub.name() + " -> " + sup.name());
    Embedding e;
    e.sub = &sub;
    e.sup = &sup;
    if (&sub == &sup) {
        e.fwd_.resize(sub.q);
        e.back_.resize(sub.q);
        for (int a = 0; a < sub.q; ++a) e.fwd_[a] = e.back_[a] = a;
        return cache.emplace(std::make_pair(&sub, &sup), std::move(e)).first->second;
    }
    // smallest root of the subfield modulus in the big field
    FieldElem root = -1;
    for (int cand = 0; cand < sup.q; ++cand) {
        FieldElem acc = 0, pw = 1;
        for (int i = 0; i <= sub.m; ++i) {
            acc = sup.add(acc, sup.mul(sub.modulus[i] % sup.p, pw));
            pw = sup.mul(pw, cand);
        }
        if (acc == 0) {
            root = cand;
            break;
        }
    }
    if (root < 0) throw std::logic_error("subfield modulus has no root in " + sup.name());
    e.fwd_.assign(sub.q, 0);
    e.back_.assign(sup.q, -1);
    for (int a = 0; a < sub.q; ++a) {
        auto digits = int_to_digits(a, sub.p, sub.m);
        FieldElem img = 0, pw = 1;
        for (int i = 0; i < sub.m; ++i) {
            img = sup.add(img, sup.mul(digits[i], pw));
            pw = sup.mul(pw, root);
        }
        e.fwd_[a] = img;
        e.back_[img] = a;
    }
    return cache.emplace(std::make_pair(&sub, &sup), std::move(e)).first->second;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const FieldCtx& F, std::vector<FieldElem> coeffs) : F_(&F), c_(std::move(coeffs)) {
    for (FieldElem v : c_)
        if (v < 0 || v >= F.q) throw std::invalid_argument("coefficient out of range");
    normalize();
}

const FieldCtx& Poly::field() const {
    if (!F_) throw std::logic_error("polynomial has no field context");
    return *F_;
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FieldElem Poly::lc() const { return c_.empty() ? 0 : c_.back(); }

Poly Poly::operator+(const Poly& o) const {
    Poly r(*F_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F_->add(coeff((int)i), o.coeff((int)i));
    r.normalize();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r(*F_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F_->sub(coeff((int)i), o.coeff((int)i));
    r.normalize();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(*F_);
    Poly r(*F_);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = F_->add(r.c_[i + j], F_->mul(c_[i], o.c_[j]));
    }
    r.normalize();
    return r;
}

Poly Poly::operator*(FieldElem s) const {
    Poly r(*F_);
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = F_->mul(c_[i], s);
    r.normalize();
    return r;
}

Poly Poly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    if (is_zero()) return *this;
    Poly r(*F_);
    r.c_.assign(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

bool Poly::operator<(const Poly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q(*F_), r = *this;
    if (deg() < d.deg()) return {q, r};
    q.c_.assign(deg() - d.deg() + 1, 0);
    FieldElem lcinv = F_->inv(d.lc());
    while (!r.is_zero() && r.deg() >= d.deg()) {
        int k = r.deg() - d.deg();
        FieldElem f = F_->mul(r.lc(), lcinv);
        q.c_[k] = f;
        // r -= f * x^k * d
        for (int i = 0; i <= d.deg(); ++i)
            r.c_[k + i] = F_->sub(r.c_[k + i], F_->mul(f, d.c_[i]));
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

bool Poly::divides(const Poly& other) const { return other.divmod(*this).second.is_zero(); }

Poly Poly::monic() const {
    if (is_zero() || c_.back() == 1) return *this;
    return *this * F_->inv(c_.back());
}

Poly Poly::derivative() const {
    Poly r(*F_);
    if (deg() < 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
        FieldElem k = static_cast<FieldElem>(i % F_->p);
        FieldElem scaled = 0;
        for (int t = 0; t < k; ++t) scaled = F_->add(scaled, c_[i]);
        r.c_[i - 1] = scaled;
    }
    r.normalize();
    return r;
}

FieldElem Poly::eval(FieldElem a) const {
    FieldElem acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = F_->add(F_->mul(acc, a), c_[i]);
    return acc;
}

int Poly::multiplicity(const Poly& d) const {
    if (d.deg() < 1) throw std::invalid_argument("multiplicity of a constant");
    if (is_zero()) throw std::invalid_argument("multiplicity in the zero polynomial");
    int k = 0;
    Poly r = *this;
    while (true) {
        auto [q, rem] = r.divmod(d);
        if (!rem.is_zero()) return k;
        r = q;
        ++k;
    }
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i > 0) {
            if (c_[i] != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

Poly poly_pow_mod(const Poly& base, long long e, const Poly& mod) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    const FieldCtx& F = base.field();
    Poly r = Poly::one(F) % mod;
    Poly b = base % mod;
    while (e > 0) {
        if (e & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return r;
}

Poly map_poly(const Embedding& emb, const Poly& f) {
    std::vector<FieldElem> c(f.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = emb(f.coeffs()[i]);
    return Poly(*emb.sup, std::move(c));
}

std::vector<FieldElem> poly_roots(const Poly& f) {
    std::vector<FieldElem> roots;
    if (f.deg() < 1) return roots;
    const FieldCtx& F = f.field();
    for (int a = 0; a < F.q; ++a)
        if (f.eval(a) == 0) roots.push_back(a);
    return roots;
}

bool poly_irreducible(const Poly& f) {
    int n = f.deg();
    if (n <= 0) return false;
    if (n == 1) return true;
    if (!poly_roots(f).empty()) return false;
    if (n <= 3) return true;  // reducible deg 2/3 would have a linear factor
    const FieldCtx& F = f.field();
    // screen for factors of each degree d <= n/2 via gcd(x^{q^d} - x, f)
    Poly xq = Poly::x(F) % f;
    for (int d = 1; d <= n / 2; ++d) {
        xq = poly_pow_mod(xq, F.q, f);
        Poly g = poly_gcd(xq - Poly::x(F), f);
        if (g.deg() > 0) return false;
    }
    return true;
}

namespace {

// p-th root of a polynomial that is a p-th power: f(x) = g(x^p) -> g with
// coefficients mapped through the inverse Frobenius.
Poly pth_root(const Poly& f) {
    const FieldCtx& F = f.field();
    std::vector<FieldElem> c;
    for (int i = 0; i <= f.deg(); i += F.p)
        c.push_back(F.frob(f.coeff(i), F.m > 0 ? F.m - 1 : 0));  // a^(p^(m-1)) = a^(1/p)
    return Poly(F, std::move(c));
}

// squarefree decomposition over F_q (characteristic p), returns (g, mult)
// pairs with g squarefree, pairwise coprime
void squarefree_decompose(const Poly& f, int outer_mult, std::vector<std::pair<Poly, int>>& out) {
    if (f.deg() <= 0) return;
    const FieldCtx& F = f.field();
    Poly d = f.derivative();
    if (d.is_zero()) {
        squarefree_decompose(pth_root(f), outer_mult * F.p, out);
        return;
    }
    Poly c = poly_gcd(f, d);
    Poly w = f / c;  // product of factors with multiplicity not divisible by p... peeled below
    int i = 1;
    while (w.deg() > 0) {
        Poly y = poly_gcd(w, c);
        Poly piece = w / y;
        if (piece.deg() > 0) out.emplace_back(piece.monic(), i * outer_mult);
        w = y;
        if (!w.divides(c)) throw std::logic_error("squarefree decomposition invariant");
        c = c / w;
        ++i;
    }
    if (c.deg() > 0) squarefree_decompose(c, outer_mult, out);
}

// equal-degree splitting of a squarefree product of irreducibles all of degree d
void equal_degree_split(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    const FieldCtx& F = f.field();
    if (f.deg() == d) {
        out.push_back(f.monic());
        return;
    }
    std::uniform_int_distribution<int> dist(0, F.q - 1);
    while (true) {
        std::vector<FieldElem> rc(f.deg());
        for (auto& v : rc) v = dist(rng);
        Poly r(F, std::move(rc));
        if (r.deg() < 1) continue;
        Poly g;
        if (F.p == 2) {
            // trace map sum r^{2^i}, i < d*m
            Poly t = r % f, acc = t;
            for (int i = 1; i < d * F.m; ++i) {
                t = (t * t) % f;
                acc = acc + t;
            }
            g = poly_gcd(acc, f);
        } else {
            long long e = 1;
            for (int i = 0; i < d; ++i) e *= F.q;
            Poly t = poly_pow_mod(r, (e - 1) / 2, f);
            g = poly_gcd(t - Poly::one(F), f);
        }
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace

Factorization poly_factor(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    const FieldCtx& F = f.field();
    Factorization result;
    result.unit = f.lc();
    if (f.deg() == 0) return result;

    std::vector<std::pair<Poly, int>> squarefree;
    squarefree_decompose(f.monic(), 1, squarefree);

    std::mt19937_64 rng(0x150D0A1ULL);  // fixed seed: factorization is deterministic
    for (auto& [part, mult] : squarefree) {
        // distinct-degree: peel off products of irreducibles of degree d
        Poly rest = part;
        Poly xq = Poly::x(F) % rest;
        int d = 0;
        while (rest.deg() > 0) {
            ++d;
            if (2 * d > rest.deg()) {
                result.factors.emplace_back(rest.monic(), mult);  // rest itself irreducible
                break;
            }
            xq = poly_pow_mod(xq, F.q, rest);
            Poly g = poly_gcd(xq - Poly::x(F), rest);
            if (g.deg() > 0) {
                std::vector<Poly> pieces;
                if (d == 1) {
                    for (FieldElem r : poly_roots(g))
                        pieces.push_back(Poly(F, {F.neg(r), 1}));
                } else {
                    equal_degree_split(g, d, rng, pieces);
                }
                for (auto& irr : pieces) result.factors.emplace_back(irr, mult);
                rest = rest / g;
                xq = xq % rest;
            }
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return result;
}

}  // namespace isodual
