#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <absl/container/inlined_vector.h>

#include "parhiggs/prng.hpp"

namespace parhiggs {

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

using CoeffVec = absl::InlinedVector<uint32_t, 8>;

/// Element of F_q, q = p^s, stored as the canonical reduced representative:
/// a coefficient vector of length s over F_p in the generator t of the
/// context.  Equality is structural; elements of different contexts never
/// compare equal.
class FieldElem {
  public:
    FieldElem() : ctx_(nullptr) {}
    FieldElem(const FieldCtx* ctx, CoeffVec c) : ctx_(ctx), c_(std::move(c)) {}

    const FieldCtx* ctx() const { return ctx_; }
    const CoeffVec& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.ctx_ == b.ctx_ && a.c_ == b.c_;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }
    friend bool operator<(const FieldElem& a, const FieldElem& b) {
        // canonical order, used for sorted eigenvalue lists and point tables
        for (size_t i = a.c_.size(); i-- > 0;)
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        return false;
    }

    FieldElem operator-() const;
    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    FieldElem inv() const;
    FieldElem pow(uint64_t e) const;
    FieldElem& operator+=(const FieldElem& b) { *this = *this + b; return *this; }
    FieldElem& operator*=(const FieldElem& b) { *this = *this * b; return *this; }

    std::string str() const;  // polynomial-in-generator, e.g. "2*t+1"

  private:
    const FieldCtx* ctx_;
    CoeffVec c_;
    friend class FieldCtx;
};

/// A finite field F_{p^s} given by a monic irreducible modulus over F_p.
/// p is an odd prime > 2.  Construction verifies irreducibility.
class FieldCtx {
  public:
    /// modulus: coefficients over F_p, degree s, monic.
    static FieldCtxPtr make(uint32_t p, std::vector<uint32_t> modulus);
    /// Deterministic seeded search for a monic irreducible modulus of
    /// degree s; identical (p, s, seed) always yield the same context.
    static FieldCtxPtr make_ext(uint32_t p, uint32_t s, uint64_t seed);

    uint32_t p() const { return p_; }
    uint32_t s() const { return s_; }
    uint64_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return mod_; }
    std::string modulus_str() const;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(int64_t v) const;
    FieldElem gen() const;                       // the class of t
    FieldElem from_coeffs(CoeffVec c) const;     // reduces length to s
    FieldElem from_index(uint64_t idx) const;    // base-p digits, for enumeration
    uint64_t to_index(const FieldElem& a) const;
    FieldElem random(Prng& rng) const;

    /// Coefficient Frobenius sigma^k, sigma(c) = c^p.  Negative k allowed;
    /// sigma^{-1}(c) = c^{q/p}.  frobenius(c, s) = c.
    FieldElem frobenius(const FieldElem& a, int64_t k) const;

    /// All elements, in index order (small fields only).
    std::vector<FieldElem> all_elements() const;

    // internal F_p helpers
    uint32_t padd(uint32_t a, uint32_t b) const { uint32_t r = a + b; return r >= p_ ? r - p_ : r; }
    uint32_t psub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t pmul(uint32_t a, uint32_t b) const { return uint32_t((uint64_t)a * b % p_); }
    uint32_t pinv(uint32_t a) const;

  private:
    FieldCtx() = default;
    void build_tables();

    uint32_t p_ = 0, s_ = 0;
    uint64_t q_ = 0;
    std::vector<uint32_t> mod_;              // length s_+1, monic
    std::vector<CoeffVec> red_;              // t^{s+j} reduced, j = 0..s-2
    std::vector<CoeffVec> frob_;             // images of t^i under sigma

    friend class FieldElem;
    friend FieldElem operator*(const FieldElem&, const FieldElem&);
};

bool is_prime_u32(uint32_t n);

/// Embedding F_{p^s} -> F_{p^{s'}} (s | s'), fixed by mapping the source
/// generator to a chosen root of the source modulus in the target.
class FieldEmbedding {
  public:
    FieldEmbedding() = default;
    FieldEmbedding(FieldCtxPtr src, FieldCtxPtr dst);
    FieldElem operator()(const FieldElem& a) const;
    const FieldCtx* src() const { return src_.get(); }
    const FieldCtx* dst() const { return dst_.get(); }
    const FieldCtxPtr& src_ptr() const { return src_; }
    const FieldCtxPtr& dst_ptr() const { return dst_; }

  private:
    FieldCtxPtr src_, dst_;
    std::vector<FieldElem> gen_pow_;  // images of t_src^i, i = 0..s-1
};

}  // namespace parhiggs
