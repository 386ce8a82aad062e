#pragma once

#include <vector>

#include "parhiggs/poly.hpp"

namespace parhiggs {

/// Length-2 Witt vector over F_q: the pair (a0, a1) with ghost component
/// a0^p + p*a1.  Addition uses the universal carry polynomial
/// (X^p + Y^p - (X+Y)^p)/p reduced mod p; multiplication is
/// (a0 b0, a0^p b1 + a1 b0^p).  Reduction (a0,a1) -> a0 is a ring map.
class W2Elem {
  public:
    W2Elem() = default;
    W2Elem(FieldElem a0, FieldElem a1) : a0_(std::move(a0)), a1_(std::move(a1)) {}

    static W2Elem zero(const FieldCtx* k) { return W2Elem(k->zero(), k->zero()); }
    static W2Elem one(const FieldCtx* k) { return W2Elem(k->one(), k->zero()); }
    /// Teichmuller lift: the multiplicative section c -> (c, 0).
    static W2Elem teich(const FieldElem& c) { return W2Elem(c, c.ctx()->zero()); }
    /// image of the integer n under Z -> W2(F_q) (i.e. mod p^2)
    static W2Elem from_int(const FieldCtx* k, int64_t n);

    const FieldElem& a0() const { return a0_; }
    const FieldElem& a1() const { return a1_; }
    const FieldCtx* ctx() const { return a0_.ctx(); }
    bool is_zero() const { return a0_.is_zero() && a1_.is_zero(); }

    FieldElem reduce() const { return a0_; }  // mod p
    /// exact division by p: defined only when a0 = 0; p*(c,0)... = (0, c^?)
    FieldElem divide_by_p() const;

    friend W2Elem operator+(const W2Elem& a, const W2Elem& b);
    friend W2Elem operator-(const W2Elem& a, const W2Elem& b);
    friend W2Elem operator*(const W2Elem& a, const W2Elem& b);
    W2Elem operator-() const;
    W2Elem inv() const;  // defined when a0 != 0
    friend bool operator==(const W2Elem& a, const W2Elem& b) {
        return a.a0_ == b.a0_ && a.a1_ == b.a1_;
    }
    friend bool operator!=(const W2Elem& a, const W2Elem& b) { return !(a == b); }

  private:
    FieldElem a0_, a1_;
};

/// Dense polynomial over W2(F_q); no trailing-zero invariant enforced by
/// normalize().  Enough arithmetic for Frobenius-lift bookkeeping.
class W2Poly {
  public:
    W2Poly() = default;
    explicit W2Poly(const FieldCtx* k) : k_(k) {}
    W2Poly(const FieldCtx* k, std::vector<W2Elem> c) : k_(k), c_(std::move(c)) { normalize(); }

    static W2Poly from_poly_teich(const Poly& f);   // coefficientwise Teichmuller
    static W2Poly x(const FieldCtx* k);
    static W2Poly constant(const W2Elem& a);
    /// (x - a)^n expanded with exact integer binomials mod p^2
    static W2Poly linear_power(const W2Elem& a, uint32_t n);

    const FieldCtx* ctx() const { return k_; }
    bool is_zero() const { return c_.empty(); }
    int deg() const { return (int)c_.size() - 1; }
    W2Elem coeff(size_t i) const { return i < c_.size() ? c_[i] : W2Elem::zero(k_); }

    friend W2Poly operator+(const W2Poly& a, const W2Poly& b);
    friend W2Poly operator-(const W2Poly& a, const W2Poly& b);
    friend W2Poly operator*(const W2Poly& a, const W2Poly& b);
    W2Poly operator-() const;

    W2Poly derivative() const;
    W2Poly compose(const W2Poly& g) const;

    Poly reduce() const;          // mod p
    Poly divide_by_p() const;     // exact; requires reduce() = 0

    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

  private:
    const FieldCtx* k_ = nullptr;
    std::vector<W2Elem> c_;
};

/// binomial C(n, k) mod p^2 as a W2 scalar (exact integer arithmetic with
/// p-valuation tracking)
W2Elem binom_mod_p2(const FieldCtx* k, uint32_t n, uint32_t r);

}  // namespace parhiggs
