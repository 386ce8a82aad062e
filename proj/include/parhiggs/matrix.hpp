#pragma once

#include <vector>

#include "parhiggs/ratfunc.hpp"

namespace parhiggs {

/// Small dense matrix of rational functions (n <= 3 in practice).
class RfMatrix {
  public:
    RfMatrix() = default;
    RfMatrix(const FieldCtx* ctx, int n, int m)
        : n_(n), m_(m), a_(size_t(n) * m, RatFunc::zero(ctx)) {}

    static RfMatrix identity(const FieldCtx* ctx, int n) {
        RfMatrix r(ctx, n, n);
        for (int i = 0; i < n; ++i) r.at(i, i) = RatFunc::one(ctx);
        return r;
    }

    int rows() const { return n_; }
    int cols() const { return m_; }
    const FieldCtx* ctx() const { return a_.empty() ? nullptr : a_[0].ctx(); }
    RatFunc& at(int i, int j) { return a_[size_t(i) * m_ + j]; }
    const RatFunc& at(int i, int j) const { return a_[size_t(i) * m_ + j]; }

    friend RfMatrix operator+(const RfMatrix& a, const RfMatrix& b);
    friend RfMatrix operator-(const RfMatrix& a, const RfMatrix& b);
    friend RfMatrix operator*(const RfMatrix& a, const RfMatrix& b);
    RfMatrix scaled(const RatFunc& f) const;
    friend bool operator==(const RfMatrix& a, const RfMatrix& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.a_ == b.a_;
    }

    RfMatrix transpose() const;
    RatFunc det() const;       // n <= 3
    RfMatrix inverse() const;  // n <= 3, via adjugate; throws when singular
    RfMatrix derivative() const;
    RfMatrix subst_pow(uint32_t k) const;
    RfMatrix compose(const RatFunc& g) const;
    RfMatrix coeff_frobenius(int64_t k) const;
    bool is_zero() const;

    std::vector<RatFunc> apply(const std::vector<RatFunc>& v) const;

  private:
    int n_ = 0, m_ = 0;
    std::vector<RatFunc> a_;
};

}  // namespace parhiggs
