#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parhiggs/factor.hpp"
#include "parhiggs/field.hpp"
#include "parhiggs/linalg.hpp"
#include "parhiggs/poly.hpp"
#include "parhiggs/prng.hpp"
#include "parhiggs/ratfunc.hpp"
#include "parhiggs/witt.hpp"

using namespace parhiggs;

TEST_CASE("prime field arithmetic and context construction") {
    auto k = FieldCtx::make_ext(3, 1, 0);
    CHECK(k->q() == 3);
    CHECK((k->from_int(2) + k->from_int(2)) == k->from_int(1));
    CHECK((k->from_int(2) * k->from_int(2)) == k->from_int(1));
    CHECK(k->from_int(2).inv() == k->from_int(2));
    CHECK_THROWS(FieldCtx::make_ext(2, 3, 0));   // p = 2 rejected
    CHECK_THROWS(FieldCtx::make_ext(9, 1, 0));   // not prime
}

TEST_CASE("F_9 with modulus t^2+1: frobenius examples") {
    // F_9 = F_3[t]/(t^2+1)
    auto k = FieldCtx::make(3, {1, 0, 1});
    FieldElem t = k->gen();
    // sigma^{-1}(t) = 2t, since (2t)^3 = t
    FieldElem tt = k->frobenius(t, -1);
    CHECK(tt == k->from_int(2) * t);
    CHECK(tt.pow(3) == t);
    // c in F_p fixed by every frobenius power
    CHECK(k->frobenius(k->from_int(2), 1) == k->from_int(2));
    // frobenius_pow(c, s) = c for all c
    for (uint64_t i = 0; i < 9; ++i) {
        FieldElem c = k->from_index(i);
        CHECK(k->frobenius(c, 2) == c);
        CHECK(k->frobenius(k->frobenius(c, -1), 1) == c);
    }
}

TEST_CASE("field axioms sampled on random triples") {
    for (auto [p, s] : {std::pair{5u, 2u}, {7u, 3u}, {13u, 1u}}) {
        auto k = FieldCtx::make_ext(p, s, 42);
        Prng rng(7);
        for (int it = 0; it < 50; ++it) {
            FieldElem a = k->random(rng), b = k->random(rng), c = k->random(rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inv() == k->one());
            // frobenius commutes with the ring operations
            CHECK(k->frobenius(a * b + c, 1) ==
                  k->frobenius(a, 1) * k->frobenius(b, 1) + k->frobenius(c, 1));
        }
    }
}

TEST_CASE("ext_field_make determinism and irreducibility") {
    auto k1 = FieldCtx::make_ext(3, 2, 0);
    auto k2 = FieldCtx::make_ext(3, 2, 0);
    CHECK(k1->modulus() == k2->modulus());
    CHECK(is_irreducible_fp(3, k1->modulus()));
    auto k3 = FieldCtx::make_ext(3, 2, 99);
    CHECK(is_irreducible_fp(3, k3->modulus()));
}

TEST_CASE("poly arithmetic basics") {
    auto k = FieldCtx::make_ext(5, 1, 0);
    Poly x = Poly::x(k.get());
    Poly f = x * x + Poly::constant(k->one());      // x^2+1
    Poly g = x - Poly::constant(k->from_int(2));    // x-2
    CHECK((f * g).deg() == 3);
    Poly q, r;
    Poly::divmod(f * g + x, f, q, r);
    CHECK(q * f + r == f * g + x);
    CHECK(r.deg() < f.deg());
    // deg(fg) = deg f + deg g over a field
    CHECK((f * g).deg() == f.deg() + g.deg());
    // derivative of x^p is zero in char p
    Poly xp = Poly::monomial(k->one(), 5);
    CHECK(xp.derivative().is_zero());
}

TEST_CASE("poly_factor: spec examples") {
    auto k3 = FieldCtx::make_ext(3, 1, 0);
    // x^2 + 1 irreducible over F_3
    Poly f(k3.get(), {k3->one(), k3->zero(), k3->one()});
    auto fac = poly_factor(f, 0);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].mult == 1);
    CHECK(fac[0].factor.deg() == 2);

    // (x-1)^2 -> [(x-1), 2]
    Poly lin = Poly::linear_root(k3->one());
    auto fac2 = poly_factor(lin * lin, 1);
    REQUIRE(fac2.size() == 1);
    CHECK(fac2[0].mult == 2);
    CHECK(fac2[0].factor == lin);

    // x^q - x over F_q: all q monic linear factors
    auto k9 = FieldCtx::make_ext(3, 2, 0);
    Poly xq = Poly::monomial(k9->one(), 9) - Poly::x(k9.get());
    auto fac3 = poly_factor(xq, 2);
    CHECK(fac3.size() == 9);
    for (auto& pf : fac3) {
        CHECK(pf.factor.deg() == 1);
        CHECK(pf.mult == 1);
    }
}

TEST_CASE("poly_factor: product round-trip on random inputs") {
    auto k = FieldCtx::make_ext(7, 2, 3);
    Prng rng(11);
    for (int it = 0; it < 10; ++it) {
        std::vector<FieldElem> c;
        for (int i = 0; i < 7; ++i) c.push_back(k->random(rng));
        Poly f(k.get(), std::move(c));
        if (f.deg() < 1) continue;
        auto fac = poly_factor(f, it);
        Poly prod = Poly::constant(f.lead());
        for (auto& pf : fac) {
            CHECK(poly_is_irreducible(pf.factor));
            for (uint32_t m = 0; m < pf.mult; ++m) prod *= pf.factor;
        }
        CHECK(prod == f);
    }
    // determinism given the seed
    Poly g(k.get(), {k->one(), k->one(), k->one(), k->one(), k->zero(), k->one()});
    auto f1 = poly_factor(g, 5);
    auto f2 = poly_factor(g, 5);
    REQUIRE(f1.size() == f2.size());
    for (size_t i = 0; i < f1.size(); ++i) CHECK(f1[i].factor == f2[i].factor);
}

TEST_CASE("rational functions: normalization, derivative, residue, compose") {
    auto k = FieldCtx::make_ext(5, 2, 1);
    FieldElem a = k->gen();
    RatFunc f(Poly::constant(k->one()), Poly::linear_root(a));  // 1/(x-a)
    CHECK(f.den().is_monic());
    CHECK(f.residue_at(a) == k->one());
    // derivative of x^p vanishes
    RatFunc xp(Poly::monomial(k->one(), 5));
    CHECK(xp.derivative().is_zero());
    // product rule on random inputs
    Prng rng(2);
    for (int it = 0; it < 8; ++it) {
        std::vector<FieldElem> c1, c2;
        for (int i = 0; i < 4; ++i) c1.push_back(k->random(rng));
        for (int i = 0; i < 3; ++i) c2.push_back(k->random(rng));
        RatFunc g(Poly(k.get(), c1), Poly(k.get(), c2) + Poly::monomial(k->one(), 3));
        RatFunc h(Poly(k.get(), c2), Poly::linear_root(a));
        CHECK((g * h).derivative() == g.derivative() * h + g * h.derivative());
    }
    // compose(1/(x-a), x^p) = 1/(x^p - a), denominator (x - a^{1/p})^p
    RatFunc comp = f.subst_pow(5);
    FieldElem root = k->frobenius(a, -1);
    Poly expect = Poly::constant(k->one());
    for (int i = 0; i < 5; ++i) expect *= Poly::linear_root(root);
    CHECK(comp.den() == expect);
    CHECK(comp == f.compose(RatFunc(Poly::monomial(k->one(), 5))));
}

TEST_CASE("laurent and infinity expansions") {
    auto k = FieldCtx::make_ext(7, 1, 0);
    FieldElem two = k->from_int(2);
    // f = 3/(x-2)^2 + 1/(x-2) + (x+5)
    Poly lin = Poly::linear_root(two);
    RatFunc f = RatFunc(Poly::constant(k->from_int(3)), lin * lin) +
                RatFunc(Poly::constant(k->one()), lin) +
                RatFunc(Poly::x(k.get()) + Poly::constant(k->from_int(5)));
    CHECK(f.ord_at(two) == -2);
    auto c = f.laurent_at(two, 2, 1);
    CHECK(c[0] == k->from_int(3));  // (x-2)^{-2}
    CHECK(c[1] == k->one());        // (x-2)^{-1}
    CHECK(f.residue_at(two) == k->one());
    RatFunc pp = f.principal_part_at(two);
    CHECK((f - pp).ord_at(two) >= 0);
    // expansion at infinity of (x^2+1)/x: x + 1/x
    RatFunc g(Poly::monomial(k->one(), 2) + Poly::constant(k->one()), Poly::x(k.get()));
    auto e = g.expansion_at_inf(2, -1);
    CHECK(e[0] == k->zero());  // x^2
    CHECK(e[1] == k->one());   // x^1
    CHECK(e[2] == k->zero());  // x^0
    CHECK(e[3] == k->one());   // x^{-1}
}

TEST_CASE("linear_solve: kernel dimensions and solve-back") {
    auto k = FieldCtx::make_ext(5, 1, 0);
    // identity: kernel {0}
    FqMatrix id(k.get(), 3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = k->one();
    CHECK(id.kernel_basis().empty());
    // zero matrix: kernel dimension n
    FqMatrix z(k.get(), 4, 4);
    CHECK(z.kernel_basis().size() == 4);
    // random 3x5 over F_5: kernel dim = 5 - rank, and A v = 0 exactly
    Prng rng(9);
    for (int it = 0; it < 10; ++it) {
        FqMatrix A(k.get(), 3, 5);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 5; ++j) A.at(i, j) = k->random(rng);
        auto ker = A.kernel_basis();
        CHECK((int)ker.size() == 5 - A.rank());
        for (auto& v : ker)
            for (int i = 0; i < 3; ++i) {
                FieldElem acc = k->zero();
                for (int j = 0; j < 5; ++j) acc += A.at(i, j) * v[j];
                CHECK(acc.is_zero());
            }
    }
}

TEST_CASE("W2 arithmetic: spec examples and ring laws") {
    auto k = FieldCtx::make_ext(3, 2, 0);
    Prng rng(4);
    // teich is multiplicative
    for (int it = 0; it < 20; ++it) {
        FieldElem c = k->random(rng), d = k->random(rng);
        CHECK(W2Elem::teich(c) * W2Elem::teich(d) == W2Elem::teich(c * d));
    }
    // p-fold sum of 1 is (0,1) with divide_by_p = 1 (over F_p)
    auto kp = FieldCtx::make_ext(3, 1, 0);
    W2Elem one = W2Elem::one(kp.get());
    W2Elem sum = W2Elem::zero(kp.get());
    for (uint32_t i = 0; i < 3; ++i) sum = sum + one;
    CHECK(sum.reduce().is_zero());
    CHECK(sum.divide_by_p() == kp->one());
    CHECK(sum == W2Elem::from_int(kp.get(), 3));
    // reduction is a ring homomorphism on random samples
    for (int it = 0; it < 30; ++it) {
        W2Elem a(k->random(rng), k->random(rng)), b(k->random(rng), k->random(rng));
        CHECK((a + b).reduce() == a.reduce() + b.reduce());
        CHECK((a * b).reduce() == a.reduce() * b.reduce());
        CHECK(((a + b) * a - a * a - b * a).is_zero());
        CHECK((a * b) * b == a * (b * b));
        if (!a.reduce().is_zero()) {
            CHECK((a * a.inv()) == W2Elem::one(k.get()));
        }
    }
    // divide_by_p errors on nonzero reduction
    CHECK_THROWS(W2Elem(k->one(), k->zero()).divide_by_p());
}

TEST_CASE("W2Poly: exact division by p and lift difference closed form") {
    auto k = FieldCtx::make_ext(5, 2, 7);
    Prng rng(5);
    FieldElem aprime = k->random(rng);
    // phi_a(x) = teich(a')^p + (x - teich(a'))^p, phi_inf(x) = x^p;
    // (phi_a - phi_inf)/p = sum_{j=1}^{p-1} a'^{p-j} x^j / j
    uint32_t p = 5;
    W2Elem ta = W2Elem::teich(aprime);
    W2Poly phi_a = W2Poly::linear_power(ta, p) +
                   W2Poly::constant([&] {
                       W2Elem v = W2Elem::one(k.get());
                       for (uint32_t i = 0; i < p; ++i) v = v * ta;
                       return v;
                   }());
    W2Poly phi_inf(k.get(), [&] {
        std::vector<W2Elem> c(p + 1, W2Elem::zero(k.get()));
        c[p] = W2Elem::one(k.get());
        return c;
    }());
    Poly t = (phi_a - phi_inf).divide_by_p();
    Poly expect(k.get());
    for (uint32_t j = 1; j < p; ++j) {
        FieldElem coef = aprime.pow(p - j) * k->from_int(j).inv();
        expect += Poly::monomial(coef, j);
    }
    CHECK(t == expect);
}

TEST_CASE("field embedding is a ring map") {
    auto src = FieldCtx::make_ext(5, 2, 1);
    auto dst = FieldCtx::make_ext(5, 4, 2);
    FieldEmbedding emb(src, dst);
    Prng rng(3);
    for (int it = 0; it < 20; ++it) {
        FieldElem a = src->random(rng), b = src->random(rng);
        CHECK(emb(a + b) == emb(a) + emb(b));
        CHECK(emb(a * b) == emb(a) * emb(b));
    }
    CHECK(emb(src->one()) == dst->one());
}

TEST_CASE("min_poly_of_mod rewrites denominators into F_q[x^N]") {
    auto k = FieldCtx::make_ext(7, 1, 0);
    // f = x^3 + 2x + 1, g = x^5 mod f: T(g) = 0 mod f with T minimal
    Poly f(k.get(), {k->one(), k->from_int(2), k->zero(), k->one()});
    Poly g = Poly::powmod(Poly::x(k.get()), 5, f);
    Poly T = min_poly_of_mod(g, f);
    CHECK(T.deg() >= 1);
    CHECK(T.deg() <= 3);
    // T(x^5) is divisible by f
    Poly comp = T.subst_pow(5);
    CHECK((comp % f).is_zero());
}
