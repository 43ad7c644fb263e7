#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "isodual/gf.hpp"

using namespace isodual;

namespace {

// Independent multiplication oracle: log/antilog tables built by repeated
// multiplication by the generator w, using nothing but shift-and-reduce on
// digit vectors.  Deliberately avoids FieldCtx internals.
struct LogTableOracle {
    int p, m, q;
    std::vector<int> antilog;          // antilog[i] = g^i for a primitive g
    std::map<int, int> log;            // inverse
    explicit LogTableOracle(const FieldCtx& F) : p(F.p), m(F.m), q(F.q) {
        auto dec = [&](int v) {
            std::vector<int> d(m);
            for (int i = 0; i < m; ++i) { d[i] = v % p; v /= p; }
            return d;
        };
        auto enc = [&](const std::vector<int>& d) {
            int v = 0;
            for (int i = m - 1; i >= 0; --i) v = v * p + d[i];
            return v;
        };
        auto raw_mul = [&](const std::vector<int>& a, const std::vector<int>& b) {
            std::vector<int> prod(2 * m, 0);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
            for (int dgr = 2 * m - 1; dgr >= m; --dgr) {
                int c = prod[dgr];
                if (!c) continue;
                prod[dgr] = 0;
                for (int k = 0; k < m; ++k)
                    prod[dgr - m + k] = ((prod[dgr - m + k] - c * F.modulus[k]) % p + p) % p;
            }
            prod.resize(m);
            return prod;
        };
        // not every table modulus has a primitive root w (F9 uses w^2+1, where
        // w has order 4), so scan for a generator of the full cyclic group
        for (int g = 2; g < q && antilog.empty(); ++g) {
            std::vector<int> cur(m, 0);
            cur[0] = 1;
            std::vector<int> tab;
            std::map<int, int> lg;
            bool ok = true;
            for (int i = 0; i < q - 1; ++i) {
                int e = enc(cur);
                if (lg.count(e)) { ok = false; break; }
                tab.push_back(e);
                lg[e] = i;
                cur = raw_mul(cur, dec(g));
            }
            if (ok && enc(cur) == 1) {
                antilog = tab;
                log = lg;
            }
        }
        REQUIRE(!antilog.empty());
    }
    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        return antilog[(log.at(a) + log.at(b)) % (q - 1)];
    }
    int inv(int a) const { return antilog[(q - 1 - log.at(a)) % (q - 1)]; }
};

FieldElem brute_trace(const FieldCtx& F, FieldElem a, int sub) {
    FieldElem acc = 0, t = a;
    for (int i = 0; i < F.m / sub; ++i) {
        acc = F.add(acc, t);
        long long e = 1;
        for (int j = 0; j < sub; ++j) e *= F.p;
        t = F.pow(t, e);
    }
    return acc;
}

}  // namespace

TEST_CASE("field_make: table entries and errors") {
    const FieldCtx& F8 = field_make(2, 3);
    CHECK(F8.q == 8);
    CHECK(F8.modulus == std::vector<int>{1, 1, 0, 1});  // w^3+w+1
    const FieldCtx& F16 = field_make(2, 4);
    CHECK(F16.q == 16);
    CHECK(F16.modulus == std::vector<int>{1, 1, 0, 0, 1});  // w^4+w+1
    const FieldCtx& F9 = field_make(3, 2);
    CHECK(F9.modulus == std::vector<int>{1, 0, 1});  // w^2+1
    CHECK_THROWS_AS(field_make(2, 5), ConfigError);
    CHECK_THROWS_AS(field_make(11, 1), ConfigError);
    // same context object on repeated calls
    CHECK(&field_make(2, 3) == &F8);
}

TEST_CASE("field arithmetic matches the log-table oracle") {
    for (auto [p, m] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
        const FieldCtx& F = field_make(p, m);
        LogTableOracle oracle(F);
        for (int a = 0; a < F.q; ++a)
            for (int b = 0; b < F.q; ++b) CHECK(F.mul(a, b) == oracle.mul(a, b));
        for (int a = 1; a < F.q; ++a) CHECK(F.inv(a) == oracle.inv(a));
    }
    // frozen examples
    const FieldCtx& F8 = field_make(2, 3);
    CHECK(F8.mul(2, 4) == 3);  // w * w^2 = w^3 = w+1
    const FieldCtx& F16 = field_make(2, 4);
    CHECK(F16.mul(8, 2) == 3);  // w^3 * w = w^4 = w+1
    CHECK(F8.inv(1) == 1);
    CHECK(F16.inv(1) == 1);
    CHECK_THROWS(F8.inv(0));
}

TEST_CASE("field axioms") {
    // exhaustive for q <= 16, sampled for the larger residue fields
    for (auto [p, m] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
        const FieldCtx& F = field_make(p, m);
        for (int a = 0; a < F.q; ++a) {
            CHECK(F.add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.add(a, F.neg(a)) == 0);
            CHECK(F.pow(a, F.q) == a);  // Frobenius fixes the field
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            for (int b = 0; b < F.q; ++b) {
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (int c = 0; c < F.q; ++c)
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
    }
    std::mt19937 rng(7);
    for (auto [p, m] : {std::pair{2, 6}, {2, 8}, {3, 4}}) {
        const FieldCtx& F = field_make(p, m);
        std::uniform_int_distribution<int> d(0, F.q - 1);
        for (int it = 0; it < 2000; ++it) {
            int a = d(rng), b = d(rng), c = d(rng);
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.pow(a, F.q) == a);
        }
    }
}

TEST_CASE("trace to subfield") {
    const FieldCtx& F8 = field_make(2, 3);
    CHECK(F8.trace(2) == 0);  // w + w^2 + w^4 = 0
    CHECK(F8.trace(1) == 1);  // 1+1+1 in char 2
    CHECK(F8.trace(6) == 0);
    for (int a = 0; a < 8; ++a) CHECK(F8.trace(a) == brute_trace(F8, a, 1));
    CHECK_THROWS(F8.trace_to_sub(1, 2));  // 2 does not divide 3

    // linearity and surjectivity, exhaustive for q <= 16
    for (auto [p, m, sub] : {std::tuple{2, 4, 1}, {2, 4, 2}, {3, 2, 1}, {2, 3, 1}}) {
        const FieldCtx& F = field_make(p, m);
        const FieldCtx& S = field_make(p, sub);
        const Embedding& emb = Embedding::get(S, F);
        std::set<FieldElem> image;
        for (int a = 0; a < F.q; ++a) {
            FieldElem t = F.trace_to_sub(a, sub);
            CHECK(t == brute_trace(F, a, sub));
            CHECK(emb.in_subfield(t));
            image.insert(t);
            for (int b = 0; b < F.q; ++b)
                CHECK(F.trace_to_sub(F.add(a, b), sub) ==
                      F.add(F.trace_to_sub(a, sub), F.trace_to_sub(b, sub)));
            // F_{p^sub}-linearity
            for (int s = 0; s < S.q; ++s)
                CHECK(F.trace_to_sub(F.mul(emb(s), a), sub) ==
                      F.mul(emb(s), F.trace_to_sub(a, sub)));
        }
        CHECK(image.size() == (size_t)S.q);  // surjective
    }
}

TEST_CASE("field_enumerate") {
    CHECK(field_make(2, 3).enumerate().size() == 8);
    CHECK(field_make(2, 4).enumerate().size() == 16);
    CHECK(field_make(2, 2).enumerate() == std::vector<FieldElem>{0, 1, 2, 3});
}

TEST_CASE("embeddings are ring maps") {
    for (auto [a, b] : {std::pair{std::pair{2, 3}, std::pair{2, 6}},
                        {{2, 4}, {2, 8}},
                        {{3, 2}, {3, 4}},
                        {{2, 2}, {2, 4}}}) {
        const FieldCtx& S = field_make(a.first, a.second);
        const FieldCtx& B = field_make(b.first, b.second);
        const Embedding& e = Embedding::get(S, B);
        CHECK(e(0) == 0);
        CHECK(e(1) == 1);
        for (int x = 0; x < S.q; ++x) {
            CHECK(e.pull_back(e(x)) == x);
            for (int y = 0; y < S.q; ++y) {
                CHECK(e(S.add(x, y)) == B.add(e(x), e(y)));
                CHECK(e(S.mul(x, y)) == B.mul(e(x), e(y)));
            }
        }
    }
}

TEST_CASE("poly arithmetic") {
    const FieldCtx& F2 = field_make(2, 1);
    const FieldCtx& F8 = field_make(2, 3);
    Poly a(F2, {1, 0, 1});  // x^2+1
    Poly b(F2, {1, 1});     // x+1
    CHECK(poly_gcd(a, b) == b);  // x^2+1 = (x+1)^2 in char 2

    Poly f(F8, {1, 1, 1});
    CHECK(f.eval(1) == 1);  // 1+1+1 over F8

    CHECK((f * Poly::zero(F8)).is_zero());
    CHECK_THROWS(f.divmod(Poly::zero(F8)));

    // deg(a*b) = deg a + deg b for nonzero a, b (spot sample)
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(0, 7);
    for (int it = 0; it < 200; ++it) {
        std::vector<FieldElem> ca(1 + it % 5), cb(1 + (it / 5) % 5);
        for (auto& v : ca) v = d(rng);
        for (auto& v : cb) v = d(rng);
        Poly pa(F8, ca), pb(F8, cb);
        if (pa.is_zero() || pb.is_zero()) continue;
        CHECK((pa * pb).deg() == pa.deg() + pb.deg());
        auto [q, r] = (pa * pb + Poly::one(F8)).divmod(pb);
        CHECK(q * pb + r == pa * pb + Poly::one(F8));
        CHECK(r.deg() < pb.deg());
    }
}

TEST_CASE("poly_factor: frozen examples") {
    const FieldCtx& F8 = field_make(2, 3);
    // z^2+z+6 = (z+2)(z+3) over F8
    auto fac = poly_factor(Poly(F8, {6, 1, 1}));
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first == Poly(F8, {2, 1}));
    CHECK(fac.factors[1].first == Poly(F8, {3, 1}));

    const FieldCtx& F2 = field_make(2, 1);
    auto fac2 = poly_factor(Poly(F2, {1, 1, 1}));
    REQUIRE(fac2.factors.size() == 1);
    CHECK(fac2.factors[0].second == 1);
    CHECK(poly_irreducible(Poly(F2, {1, 1, 1})));

    const FieldCtx& F4 = field_make(2, 2);
    auto fac3 = poly_factor(Poly(F4, {1, 1, 1}));  // roots are the two non-subfield elements
    REQUIRE(fac3.factors.size() == 2);
    for (auto& [g, mult] : fac3.factors) {
        CHECK(g.deg() == 1);
        CHECK(mult == 1);
        CHECK(Poly(F4, {1, 1, 1}).eval(F4.neg(g.coeff(0))) == 0);
    }
    CHECK_THROWS(poly_factor(Poly::zero(F8)));
}

TEST_CASE("poly_factor: random round-trips and certified factors") {
    std::mt19937 rng(11);
    for (auto [p, m] : {std::pair{2, 3}, {3, 2}, {2, 4}}) {
        const FieldCtx& F = field_make(p, m);
        std::uniform_int_distribution<int> d(0, F.q - 1);
        for (int it = 0; it < 60; ++it) {
            int deg = 1 + it % 9;
            std::vector<FieldElem> c(deg + 1);
            for (auto& v : c) v = d(rng);
            c[deg] = 1 + d(rng) % (F.q - 1);
            Poly f(F, c);
            auto fac = poly_factor(f);
            Poly prod = Poly::constant(F, fac.unit);
            for (auto& [g, mult] : fac.factors) {
                CHECK(g.is_monic());
                CHECK(poly_irreducible(g));
                // no roots in F_{q^j} for j < deg g: distinct-degree gcd screen
                Poly xq = Poly::x(F) % g;
                for (int j = 1; j < g.deg(); ++j) {
                    xq = poly_pow_mod(xq, F.q, g);
                    CHECK(poly_gcd(xq - Poly::x(F), g).deg() == 0);
                }
                for (int i = 0; i < mult; ++i) prod = prod * g;
            }
            CHECK(prod == f);
        }
    }
}
