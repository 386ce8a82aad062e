#pragma once

#include <string>
#include <vector>

#include "parhiggs/poly.hpp"

namespace parhiggs {

/// Normalized rational function: monic denominator, gcd(num, den) = 1.
class RatFunc {
  public:
    RatFunc() = default;
    explicit RatFunc(const FieldCtx* ctx)
        : num_(Poly::zero(ctx)), den_(Poly::constant(ctx->one())) {}
    RatFunc(Poly num, Poly den);
    RatFunc(const Poly& num);  // NOLINT: polynomial as rational function

    static RatFunc zero(const FieldCtx* ctx) { return RatFunc(ctx); }
    static RatFunc one(const FieldCtx* ctx) { return RatFunc(Poly::constant(ctx->one())); }
    static RatFunc constant(const FieldElem& a) { return RatFunc(Poly::constant(a)); }
    static RatFunc x(const FieldCtx* ctx) { return RatFunc(Poly::x(ctx)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FieldCtx* ctx() const { return den_.ctx(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.deg() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& b) { *this = *this + b; return *this; }
    RatFunc& operator-=(const RatFunc& b) { *this = *this - b; return *this; }
    RatFunc& operator*=(const RatFunc& b) { *this = *this * b; return *this; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inv() const;
    RatFunc derivative() const;
    /// substitute x -> g(x)
    RatFunc compose(const RatFunc& g) const;
    /// substitute x -> x^k
    RatFunc subst_pow(uint32_t k) const;
    RatFunc coeff_frobenius(int64_t k) const;

    FieldElem eval(const FieldElem& a) const;  // throws on pole
    bool has_pole_at(const FieldElem& a) const;

    /// order of vanishing at a (negative for a pole)
    int ord_at(const FieldElem& a) const;
    /// order of vanishing at infinity: deg den - deg num (ord of the zero at
    /// u=0 after x = 1/u); the zero function returns a large sentinel.
    int ord_at_inf() const;

    /// Laurent coefficients c_{-n}, ..., c_{m} at the point a: returns the
    /// coefficients of (x-a)^j for j in [-n, m].
    std::vector<FieldElem> laurent_at(const FieldElem& a, int n, int m) const;
    /// coefficient of (x-a)^{-1}
    FieldElem residue_at(const FieldElem& a) const;
    /// principal part at a: sum of negative-power terms, as a RatFunc
    RatFunc principal_part_at(const FieldElem& a) const;
    /// Expansion at infinity: coefficients of x^{k} for k = hi down to lo.
    std::vector<FieldElem> expansion_at_inf(int hi, int lo) const;

    std::string str() const;  // "num/den", den omitted when 1

  private:
    Poly num_, den_;
    void normalize();
};

/// Krylov minimal polynomial of multiplication by g in F_q[x]/(f):
/// the monic T of least degree with T(g) = 0 mod f.  Used to rewrite
/// denominators inside the subfield F_q(x^N).
Poly min_poly_of_mod(const Poly& g, const Poly& f);

}  // namespace parhiggs
