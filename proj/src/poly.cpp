#include "parhiggs/poly.hpp"

#include <stdexcept>

namespace parhiggs {

Poly Poly::constant(const FieldElem& a) {
    Poly f(a.ctx());
    if (!a.is_zero()) f.c_.push_back(a);
    return f;
}

Poly Poly::x(const FieldCtx* ctx) {
    Poly f(ctx);
    f.c_ = {ctx->zero(), ctx->one()};
    return f;
}

Poly Poly::monomial(const FieldElem& a, size_t k) {
    Poly f(a.ctx());
    if (a.is_zero()) return f;
    f.c_.assign(k + 1, a.ctx()->zero());
    f.c_[k] = a;
    return f;
}

Poly Poly::from_fp_coeffs(const FieldCtx* ctx, const std::vector<uint32_t>& c) {
    Poly f(ctx);
    f.c_.reserve(c.size());
    for (uint32_t v : c) f.c_.push_back(ctx->from_int(v));
    f.normalize();
    return f;
}

Poly Poly::linear_root(const FieldElem& a) {
    Poly f(a.ctx());
    f.c_ = {-a, a.ctx()->one()};
    return f;
}

FieldElem Poly::coeff(size_t i) const {
    if (i < c_.size()) return c_[i];
    return ctx_->zero();
}

FieldElem Poly::lead() const {
    if (c_.empty()) throw std::domain_error("Poly::lead of zero");
    return c_.back();
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r(a.ctx_ ? a.ctx_ : b.ctx_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), r.ctx_->zero());
    for (size_t i = 0; i < r.c_.size(); ++i) {
        FieldElem v = r.ctx_->zero();
        if (i < a.c_.size()) v += a.c_[i];
        if (i < b.c_.size()) v += b.c_[i];
        r.c_[i] = v;
    }
    r.normalize();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
    Poly r(ctx_);
    r.c_.reserve(c_.size());
    for (const auto& v : c_) r.c_.push_back(-v);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.ctx_ ? a.ctx_ : b.ctx_);
    Poly r(a.ctx_);
    r.c_.assign(a.c_.size() + b.c_.size() - 1, a.ctx_->zero());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
}

Poly Poly::scaled(const FieldElem& a) const {
    if (a.is_zero()) return Poly(ctx_);
    Poly r(ctx_);
    r.c_.reserve(c_.size());
    for (const auto& v : c_) r.c_.push_back(v * a);
    r.normalize();
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inv());
}

Poly Poly::derivative() const {
    Poly r(ctx_);
    if (c_.size() <= 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(ctx_->from_int((int64_t)i) * c_[i]);
    r.normalize();
    return r;
}

FieldElem Poly::eval(const FieldElem& x) const {
    FieldElem acc = ctx_->zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::subst_pow(uint32_t k) const {
    if (k == 0) throw std::invalid_argument("subst_pow: k must be >= 1");
    if (is_zero() || k == 1) return *this;
    Poly r(ctx_);
    r.c_.assign((c_.size() - 1) * k + 1, ctx_->zero());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    return r;
}

Poly Poly::compose(const Poly& g) const {
    Poly acc(ctx_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * g + Poly::constant(c_[i]);
    return acc;
}

Poly Poly::shift(const FieldElem& a) const {
    if (a.is_zero()) return *this;
    // Horner with (x + a)
    Poly xa(ctx_);
    xa.c_ = {a, ctx_->one()};
    return compose(xa);
}

Poly Poly::coeff_frobenius(int64_t k) const {
    Poly r(ctx_);
    r.c_.reserve(c_.size());
    for (const auto& v : c_) r.c_.push_back(ctx_->frobenius(v, k));
    return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("Poly division by zero");
    const FieldCtx* k = a.ctx_ ? a.ctx_ : b.ctx_;
    q = Poly(k);
    r = a;
    if (a.deg() < b.deg()) return;
    FieldElem lead_inv = b.lead().inv();
    q.c_.assign(a.deg() - b.deg() + 1, k->zero());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        size_t shift = r.deg() - b.deg();
        FieldElem c = r.c_.back() * lead_inv;
        q.c_[shift] = c;
        for (size_t i = 0; i < b.c_.size(); ++i)
            r.c_[shift + i] = r.c_[shift + i] - c * b.c_[i];
        r.normalize();
    }
    q.normalize();
}

Poly operator/(const Poly& a, const Poly& b) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    return q;
}

Poly operator%(const Poly& a, const Poly& b) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    return r;
}

Poly Poly::div_exact(const Poly& b) const {
    Poly q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw std::logic_error("Poly::div_exact: nonzero remainder");
    return q;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

Poly Poly::powmod(const Poly& base, uint64_t e, const Poly& mod) {
    Poly acc = Poly::constant(mod.ctx()->one());
    Poly b = base % mod;
    while (e) {
        if (e & 1) acc = (acc * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return acc;
}

Poly Poly::xq_pow_mod(const Poly& f, uint32_t e) {
    Poly acc = Poly::x(f.ctx()) % f;
    for (uint32_t i = 0; i < e; ++i) acc = powmod(acc, f.ctx()->q(), f);
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += "+";
        std::string cs = c_[i].str();
        bool needs_paren = cs.find('+') != std::string::npos;
        if (i == 0) {
            out += needs_paren ? "(" + cs + ")" : cs;
            continue;
        }
        if (!c_[i].is_one()) out += (needs_paren ? "(" + cs + ")" : cs) + "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace parhiggs
