#pragma once

#include <string>
#include <vector>

#include "parhiggs/field.hpp"

namespace parhiggs {

/// Dense univariate polynomial over F_q.  Invariant: no trailing zeros;
/// the zero polynomial has an empty coefficient list.
class Poly {
  public:
    Poly() : ctx_(nullptr) {}
    explicit Poly(const FieldCtx* ctx) : ctx_(ctx) {}
    Poly(const FieldCtx* ctx, std::vector<FieldElem> c) : ctx_(ctx), c_(std::move(c)) {
        normalize();
    }

    static Poly zero(const FieldCtx* ctx) { return Poly(ctx); }
    static Poly constant(const FieldElem& a);
    static Poly x(const FieldCtx* ctx);                       // the monomial x
    static Poly monomial(const FieldElem& a, size_t k);       // a*x^k
    static Poly from_fp_coeffs(const FieldCtx* ctx, const std::vector<uint32_t>& c);
    /// x - a
    static Poly linear_root(const FieldElem& a);

    const FieldCtx* ctx() const { return ctx_; }
    bool is_zero() const { return c_.empty(); }
    int deg() const { return (int)c_.size() - 1; }  // deg 0 polynomial = -1
    const std::vector<FieldElem>& coeffs() const { return c_; }
    FieldElem coeff(size_t i) const;
    FieldElem lead() const;
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly& operator+=(const Poly& b) { *this = *this + b; return *this; }
    Poly& operator-=(const Poly& b) { *this = *this - b; return *this; }
    Poly& operator*=(const Poly& b) { *this = *this * b; return *this; }
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.ctx_ == b.ctx_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const FieldElem& a) const;
    Poly monic() const;
    Poly derivative() const;
    FieldElem eval(const FieldElem& x) const;
    /// substitute x -> x^k (k >= 1)
    Poly subst_pow(uint32_t k) const;
    /// substitute x -> g(x)
    Poly compose(const Poly& g) const;
    /// Taylor shift: f(x + a)
    Poly shift(const FieldElem& a) const;
    /// coefficient-wise Frobenius sigma^k
    Poly coeff_frobenius(int64_t k) const;

    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    friend Poly operator/(const Poly& a, const Poly& b);
    friend Poly operator%(const Poly& a, const Poly& b);
    /// exact division; throws if the remainder is nonzero
    Poly div_exact(const Poly& b) const;

    static Poly gcd(Poly a, Poly b);  // monic gcd
    static Poly powmod(const Poly& base, uint64_t e, const Poly& mod);
    /// x^(q^e) mod f via repeated q-power
    static Poly xq_pow_mod(const Poly& f, uint32_t e);

    std::string str() const;  // e.g. "x^2+2*x+1"

    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

  private:
    const FieldCtx* ctx_;
    std::vector<FieldElem> c_;
};

}  // namespace parhiggs
