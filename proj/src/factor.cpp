#include "parhiggs/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "parhiggs/prng.hpp"

namespace parhiggs {

// ---------------------------------------------------------- F_p irreducible

namespace {

using FpPoly = std::vector<uint32_t>;  // dense, may carry trailing zeros

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mulmod(uint32_t p, const FpPoly& a, const FpPoly& b, const FpPoly& m) {
    FpPoly r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = uint32_t((r[i + j] + (uint64_t)a[i] * b[j]) % p);
    }
    fp_trim(r);
    // reduce mod m (monic)
    while (r.size() >= m.size()) {
        uint32_t c = r.back();
        size_t shift = r.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            uint64_t sub = (uint64_t)c * m[i] % p;
            r[shift + i] = uint32_t((r[shift + i] + p - sub) % p);
        }
        fp_trim(r);
    }
    return r;
}

FpPoly fp_powmod_x(uint32_t p, uint64_t e, const FpPoly& m) {
    // x^e mod m
    FpPoly acc{1}, base{0, 1};
    if (m.size() == 2) {  // degree-1 modulus: x = const
        base = fp_mulmod(p, base, {1}, m);
    }
    while (e) {
        if (e & 1) acc = fp_mulmod(p, acc, base, m);
        base = fp_mulmod(p, base, base, m);
        e >>= 1;
    }
    return acc;
}

FpPoly fp_gcd(uint32_t p, FpPoly a, FpPoly b) {
    fp_trim(a);
    fp_trim(b);
    auto inv = [p](uint32_t x) {
        uint32_t r = 1, e = p - 2;
        uint64_t bb = x;
        while (e) {
            if (e & 1) r = uint32_t(r * bb % p);
            bb = bb * bb % p;
            e >>= 1;
        }
        return r;
    };
    while (!b.empty()) {
        // a mod b
        FpPoly r = a;
        uint32_t li = inv(b.back());
        while (r.size() >= b.size() && !r.empty()) {
            uint32_t c = uint32_t((uint64_t)r.back() * li % p);
            size_t shift = r.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) {
                uint64_t sub = (uint64_t)c * b[i] % p;
                r[shift + i] = uint32_t((r[shift + i] + p - sub) % p);
            }
            fp_trim(r);
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

bool is_irreducible_fp(uint32_t p, const std::vector<uint32_t>& f_in) {
    FpPoly f = f_in;
    fp_trim(f);
    if (f.size() < 2) return false;
    size_t n = f.size() - 1;
    if (n == 1) return true;
    // x^{p^n} == x mod f, and gcd(x^{p^{n/l}} - x, f) = 1 for primes l | n
    uint64_t pn = 1;
    for (size_t i = 0; i < n; ++i) pn *= p;
    FpPoly xpn = fp_powmod_x(p, pn, f);
    // xpn - x must be 0
    FpPoly diff = xpn;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    fp_trim(diff);
    if (!diff.empty()) return false;
    for (size_t l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool lprime = true;
        for (size_t d = 2; d * d <= l; ++d)
            if (l % d == 0) { lprime = false; break; }
        if (!lprime) continue;
        uint64_t pk = 1;
        for (size_t i = 0; i < n / l; ++i) pk *= p;
        FpPoly xpk = fp_powmod_x(p, pk, f);
        FpPoly d = xpk;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        fp_trim(d);
        FpPoly g = fp_gcd(p, f, d);
        if (g.size() != 1) return false;
    }
    return true;
}

// ------------------------------------------------------- factorization, F_q

namespace {

/// p-th root extraction for f with f' = 0, i.e. f(x) = g(x^p).
Poly pth_root(const Poly& f) {
    const FieldCtx* k = f.ctx();
    uint32_t p = k->p();
    std::vector<FieldElem> c;
    for (size_t i = 0; i * p <= (size_t)f.deg(); ++i)
        c.push_back(k->frobenius(f.coeff(i * p), -1));
    return Poly(k, std::move(c));
}

void squarefree_decompose(const Poly& f, uint32_t outer_mult,
                          std::vector<std::pair<Poly, uint32_t>>& out) {
    // Yun's decomposition adapted to char p: the derivative-free residue is
    // a p-th power and recurses with multiplicity scaled by p
    Poly cur = f.monic();
    uint32_t mult = outer_mult;
    if (cur.deg() <= 0) return;
    Poly d = cur.derivative();
    if (d.is_zero()) {
        squarefree_decompose(pth_root(cur), outer_mult * cur.ctx()->p(), out);
        return;
    }
    Poly g = Poly::gcd(cur, d);
    Poly w = cur / g;
    uint32_t i = 1;
    while (w.deg() > 0) {
        Poly y = Poly::gcd(w, g);
        Poly fac = w / y;
        if (fac.deg() > 0) out.emplace_back(fac.monic(), mult * i);
        ++i;
        w = y;
        g = g / y;
    }
    if (g.deg() > 0)
        squarefree_decompose(pth_root(g), mult * cur.ctx()->p(), out);
}

/// distinct-degree split of a squarefree monic f
std::vector<std::pair<Poly, uint32_t>> ddf(const Poly& f) {
    std::vector<std::pair<Poly, uint32_t>> out;  // (product of deg-d irreducibles, d)
    const FieldCtx* k = f.ctx();
    Poly rem = f;
    Poly h = Poly::x(k) % rem;  // x^{q^i} mod rem
    uint32_t d = 0;
    while (rem.deg() > 0) {
        ++d;
        if ((int)d > rem.deg() / 2) {
            out.emplace_back(rem, (uint32_t)rem.deg());
            break;
        }
        h = Poly::powmod(h, k->q(), rem);
        Poly g = Poly::gcd(rem, h - Poly::x(k));
        if (g.deg() > 0) {
            out.emplace_back(g, d);
            rem = rem / g;
            h = h % rem;
        }
    }
    return out;
}

Poly powmod_wide(const Poly& base, unsigned __int128 e, const Poly& mod) {
    Poly acc = Poly::constant(mod.ctx()->one());
    Poly b = base % mod;
    while (e) {
        if (e & 1) acc = (acc * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return acc;
}

/// equal-degree split (Cantor-Zassenhaus, odd q), seeded
void edf(const Poly& f, uint32_t d, Prng& rng, std::vector<Poly>& out) {
    if ((uint32_t)f.deg() == d) {
        out.push_back(f.monic());
        return;
    }
    const FieldCtx* k = f.ctx();
    unsigned __int128 qd = 1;
    for (uint32_t i = 0; i < d; ++i) qd *= k->q();
    unsigned __int128 e = (qd - 1) / 2;
    for (;;) {
        Poly r(k);
        {
            std::vector<FieldElem> c;
            for (int i = 0; i < f.deg(); ++i) c.push_back(k->random(rng));
            r = Poly(k, std::move(c));
        }
        if (r.deg() < 1) continue;
        Poly g = Poly::gcd(f, r);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            edf(g, d, rng, out);
            edf(f / g, d, rng, out);
            return;
        }
        Poly h = powmod_wide(r, e, f) - Poly::constant(k->one());
        g = Poly::gcd(f, h);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            edf(g, d, rng, out);
            edf(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<PolyFactor> poly_factor(const Poly& f, uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("poly_factor: zero polynomial");
    std::vector<PolyFactor> result;
    if (f.deg() == 0) return result;
    std::vector<std::pair<Poly, uint32_t>> sqf;
    squarefree_decompose(f, 1, sqf);
    Prng rng(seed);
    for (auto& [part, mult] : sqf) {
        for (auto& [prod, d] : ddf(part)) {
            std::vector<Poly> irr;
            edf(prod, d, rng, irr);
            std::sort(irr.begin(), irr.end(), [](const Poly& a, const Poly& b) {
                if (a.deg() != b.deg()) return a.deg() < b.deg();
                for (size_t i = a.coeffs().size(); i-- > 0;) {
                    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
                }
                return false;
            });
            for (auto& g : irr) result.push_back({g, mult});
        }
    }
    std::sort(result.begin(), result.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor.deg() != b.factor.deg()) return a.factor.deg() < b.factor.deg();
        for (size_t i = a.factor.coeffs().size(); i-- > 0;) {
            if (a.factor.coeffs()[i] != b.factor.coeffs()[i])
                return a.factor.coeffs()[i] < b.factor.coeffs()[i];
        }
        return a.mult < b.mult;
    });
    return result;
}

std::vector<FieldElem> poly_roots_in_field(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("poly_roots_in_field: zero polynomial");
    const FieldCtx* k = f.ctx();
    // roots of gcd(f, x^q - x); small degrees, so extract by factoring the
    // linear part directly
    Poly xq = Poly::powmod(Poly::x(k), k->q(), f);
    Poly lin = Poly::gcd(f, xq - Poly::x(k));
    std::vector<FieldElem> roots;
    if (lin.deg() <= 0) return roots;
    // split the product of linears deterministically
    std::vector<PolyFactor> fac = poly_factor(lin, /*seed=*/0x5eedf00d);
    for (auto& pf : fac)
        if (pf.factor.deg() == 1) roots.push_back(-pf.factor.coeff(0));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

bool poly_is_irreducible(const Poly& f) {
    if (f.deg() <= 0) return false;
    if (f.deg() == 1) return true;
    auto fac = poly_factor(f, 0x12345);
    return fac.size() == 1 && fac[0].mult == 1;
}

}  // namespace parhiggs
