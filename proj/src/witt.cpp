#include "parhiggs/witt.hpp"

#include <stdexcept>

namespace parhiggs {

namespace {

/// carry polynomial (X^p + Y^p - (X+Y)^p)/p mod p evaluated at (x, y);
/// (1/p) C(p,k) = (-1)^{k-1} / k mod p
FieldElem carry(const FieldElem& x, const FieldElem& y) {
    const FieldCtx* k = x.ctx();
    uint32_t p = k->p();
    FieldElem acc = k->zero();
    FieldElem xp = x;           // x^j
    std::vector<FieldElem> ypow(p);
    ypow[0] = k->one();
    for (uint32_t j = 1; j < p; ++j) ypow[j] = ypow[j - 1] * y;
    for (uint32_t j = 1; j < p; ++j) {
        // term -(1/p)C(p,j) x^j y^{p-j} with (1/p)C(p,j) = (-1)^{j-1}/j
        uint32_t jinv = k->pinv(j % p);
        int64_t sign = (j % 2 == 1) ? 1 : -1;   // (-1)^{j-1}
        FieldElem coef = k->from_int(-sign * (int64_t)jinv);
        acc += coef * xp * ypow[p - j];
        xp = xp * x;
    }
    return acc;
}

}  // namespace

W2Elem W2Elem::from_int(const FieldCtx* k, int64_t n) {
    int64_t p = k->p(), p2 = p * p;
    int64_t m = n % p2;
    if (m < 0) m += p2;
    int64_t u = m % p;
    // ghost: m = u^p + p*a1 mod p^2, and u^p = u + p*binom-part; compute
    // u^p mod p^2 honestly
    int64_t up = 1;
    for (int64_t i = 0; i < p; ++i) up = up * u % p2;
    int64_t a1 = ((m - up) / p) % p;
    if (a1 < 0) a1 += p;
    return W2Elem(k->from_int(u), k->from_int(a1));
}

FieldElem W2Elem::divide_by_p() const {
    if (!a0_.is_zero()) throw std::domain_error("W2Elem::divide_by_p: nonzero reduction");
    return a1_;
}

W2Elem operator+(const W2Elem& a, const W2Elem& b) {
    return W2Elem(a.a0_ + b.a0_, a.a1_ + b.a1_ + carry(a.a0_, b.a0_));
}

W2Elem W2Elem::operator-() const {
    // p odd: the carry of (x, -x) vanishes
    return W2Elem(-a0_, -a1_);
}

W2Elem operator-(const W2Elem& a, const W2Elem& b) { return a + (-b); }

W2Elem operator*(const W2Elem& a, const W2Elem& b) {
    const FieldCtx* k = a.ctx();
    return W2Elem(a.a0_ * b.a0_,
                  k->frobenius(a.a0_, 1) * b.a1_ + a.a1_ * k->frobenius(b.a0_, 1));
}

W2Elem W2Elem::inv() const {
    if (a0_.is_zero()) throw std::domain_error("W2Elem::inv: not a unit");
    // (a0, a1)^{-1} = (a0^{-1}, -a1 a0^{-p} a0^{-p}) ... solve (x0,x1):
    // a0 x0 = 1, a0^p x1 + a1 x0^p = 0
    const FieldCtx* k = ctx();
    FieldElem x0 = a0_.inv();
    FieldElem a0p = k->frobenius(a0_, 1);
    FieldElem x1 = -(a1_ * k->frobenius(x0, 1)) * a0p.inv();
    return W2Elem(x0, x1);
}

// -------------------------------------------------------------------- W2Poly

W2Poly W2Poly::from_poly_teich(const Poly& f) {
    W2Poly g(f.ctx());
    g.c_.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) g.c_.push_back(W2Elem::teich(c));
    g.normalize();
    return g;
}

W2Poly W2Poly::x(const FieldCtx* k) {
    return W2Poly(k, {W2Elem::zero(k), W2Elem::one(k)});
}

W2Poly W2Poly::constant(const W2Elem& a) {
    W2Poly g(a.ctx());
    if (!a.is_zero()) g.c_.push_back(a);
    return g;
}

W2Elem binom_mod_p2(const FieldCtx* k, uint32_t n, uint32_t r) {
    uint64_t p = k->p(), p2 = (uint64_t)p * p;
    if (r > n) return W2Elem::zero(k);
    // running product with explicit p-valuation
    uint64_t unit = 1;
    int val = 0;
    auto mul_term = [&](uint64_t t) {
        while (t % p == 0) { t /= p; ++val; }
        unit = unit * (t % p2) % p2;
    };
    auto div_term = [&](uint64_t t) {
        while (t % p == 0) { t /= p; --val; }
        // inverse of t mod p^2 (t coprime to p): Euler with exponent p(p-1)-1
        uint64_t e = p * (p - 1) - 1, b = t % p2, acc = 1;
        while (e) {
            if (e & 1) acc = acc * b % p2;
            b = b * b % p2;
            e >>= 1;
        }
        unit = unit * acc % p2;
    };
    for (uint32_t i = 1; i <= r; ++i) {
        mul_term(n - r + i);
        div_term(i);
    }
    if (val >= 2) return W2Elem::zero(k);
    uint64_t v = unit;
    for (int i = 0; i < val; ++i) v = v * p % p2;
    return W2Elem::from_int(k, (int64_t)v);
}

W2Poly W2Poly::linear_power(const W2Elem& a, uint32_t n) {
    // (x - a)^n via binomials
    const FieldCtx* k = a.ctx();
    std::vector<W2Elem> c(n + 1, W2Elem::zero(k));
    W2Elem apow = W2Elem::one(k);  // (-a)^j
    W2Elem ma = -a;
    for (uint32_t j = 0; j <= n; ++j) {
        c[n - j] = binom_mod_p2(k, n, j) * apow;
        apow = apow * ma;
    }
    return W2Poly(k, std::move(c));
}

W2Poly operator+(const W2Poly& a, const W2Poly& b) {
    const FieldCtx* k = a.k_ ? a.k_ : b.k_;
    W2Poly r(k);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), W2Elem::zero(k));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        W2Elem v = W2Elem::zero(k);
        if (i < a.c_.size()) v = v + a.c_[i];
        if (i < b.c_.size()) v = v + b.c_[i];
        r.c_[i] = v;
    }
    r.normalize();
    return r;
}

W2Poly W2Poly::operator-() const {
    W2Poly r(k_);
    r.c_.reserve(c_.size());
    for (const auto& v : c_) r.c_.push_back(-v);
    return r;
}

W2Poly operator-(const W2Poly& a, const W2Poly& b) { return a + (-b); }

W2Poly operator*(const W2Poly& a, const W2Poly& b) {
    const FieldCtx* k = a.k_ ? a.k_ : b.k_;
    W2Poly r(k);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, W2Elem::zero(k));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
}

W2Poly W2Poly::derivative() const {
    W2Poly r(k_);
    if (c_.size() <= 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(W2Elem::from_int(k_, (int64_t)i) * c_[i]);
    r.normalize();
    return r;
}

W2Poly W2Poly::compose(const W2Poly& g) const {
    W2Poly acc(k_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * g + W2Poly::constant(c_[i]);
    return acc;
}

Poly W2Poly::reduce() const {
    std::vector<FieldElem> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(v.reduce());
    return Poly(k_, std::move(c));
}

Poly W2Poly::divide_by_p() const {
    // reduction of the exact quotient: p*(y0, y1) = (0, y0^p), so the
    // quotient's reduction is sigma^{-1} of the a1 component
    std::vector<FieldElem> c;
    c.reserve(c_.size());
    for (const auto& v : c_) {
        if (!v.a0().is_zero())
            throw std::logic_error("W2Poly::divide_by_p: coefficient not divisible by p");
        c.push_back(k_->frobenius(v.a1(), -1));
    }
    return Poly(k_, std::move(c));
}

}  // namespace parhiggs
