#include "parhiggs/field.hpp"

#include <algorithm>
#include <stdexcept>

#include "parhiggs/poly.hpp"
#include "parhiggs/factor.hpp"

namespace parhiggs {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------- FieldElem

bool FieldElem::is_zero() const {
    for (uint32_t v : c_) if (v) return false;
    return true;
}

bool FieldElem::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i) if (c_[i]) return false;
    return true;
}

FieldElem FieldElem::operator-() const {
    CoeffVec r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = ctx_->psub(0, c_[i]);
    return FieldElem(ctx_, std::move(r));
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    const FieldCtx* k = a.ctx_;
    CoeffVec r(a.c_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = k->padd(a.c_[i], b.c_[i]);
    return FieldElem(k, std::move(r));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    const FieldCtx* k = a.ctx_;
    CoeffVec r(a.c_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = k->psub(a.c_[i], b.c_[i]);
    return FieldElem(k, std::move(r));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    const FieldCtx* k = a.ctx_;
    uint32_t s = k->s();
    if (s == 1)
        return FieldElem(k, CoeffVec{k->pmul(a.c_[0], b.c_[0])});
    // schoolbook product, then fold t^{s+j} via the reduction table
    std::vector<uint64_t> prod(2 * s - 1, 0);
    uint64_t p2 = (uint64_t)k->p() * k->p();
    for (uint32_t i = 0; i < s; ++i) {
        if (!a.c_[i]) continue;
        for (uint32_t j = 0; j < s; ++j) {
            prod[i + j] += (uint64_t)a.c_[i] * b.c_[j];
            if (prod[i + j] >= 64 * p2) prod[i + j] %= k->p();
        }
    }
    CoeffVec r(s);
    for (uint32_t i = 0; i < s; ++i) r[i] = uint32_t(prod[i] % k->p());
    for (uint32_t j = 0; j + s < 2 * s - 1 + 0u; ++j) {
        uint32_t hi = uint32_t(prod[s + j] % k->p());
        if (!hi) continue;
        const CoeffVec& red = k->red_[j];
        for (uint32_t i = 0; i < s; ++i) r[i] = k->padd(r[i], k->pmul(hi, red[i]));
    }
    return FieldElem(k, std::move(r));
}

FieldElem FieldElem::pow(uint64_t e) const {
    FieldElem base = *this, acc = ctx_->one();
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw std::domain_error("FieldElem::inv: zero");
    // extended Euclid in F_p[t] against the modulus
    const FieldCtx* k = ctx_;
    if (k->s() == 1) return FieldElem(k, CoeffVec{k->pinv(c_[0])});
    std::vector<uint32_t> r0(k->modulus());
    std::vector<uint32_t> r1(c_.begin(), c_.end());
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<uint32_t> t0{}, t1{1};
    auto deg = [](const std::vector<uint32_t>& f) { return (int)f.size() - 1; };
    while (deg(r1) > 0) {
        // divide r0 by r1
        std::vector<uint32_t> rem = r0, quo;
        uint32_t lead_inv = k->pinv(r1.back());
        quo.assign(std::max(0, deg(r0) - deg(r1)) + 1, 0);
        for (int d = deg(rem); d >= deg(r1); --d) {
            uint32_t c = k->pmul(rem[d], lead_inv);
            if (!c) continue;
            quo[d - deg(r1)] = c;
            for (int i = 0; i <= deg(r1); ++i)
                rem[d - deg(r1) + i] = k->psub(rem[d - deg(r1) + i], k->pmul(c, r1[i]));
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        // t2 = t0 - quo*t1
        std::vector<uint32_t> t2 = t0;
        t2.resize(std::max(t0.size(), quo.size() + t1.size()), 0);
        for (size_t i = 0; i < quo.size(); ++i)
            for (size_t j = 0; j < t1.size(); ++j)
                t2[i + j] = k->psub(t2[i + j], k->pmul(quo[i], t1[j]));
        while (!t2.empty() && t2.back() == 0) t2.pop_back();
        r0 = std::move(r1); r1 = std::move(rem);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r1.empty()) throw std::domain_error("FieldElem::inv: not a unit");
    uint32_t scale = k->pinv(r1[0]);
    CoeffVec out(k->s());
    for (size_t i = 0; i < t1.size(); ++i) out[i] = k->pmul(t1[i], scale);
    return FieldElem(k, std::move(out));
}

std::string FieldElem::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c_[i]);
        } else {
            if (c_[i] != 1) out += std::to_string(c_[i]) + "*";
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// ----------------------------------------------------------------- FieldCtx

uint32_t FieldCtx::pinv(uint32_t a) const {
    if (a == 0) throw std::domain_error("F_p inverse of zero");
    // Fermat
    uint32_t r = 1, b = a, e = p_ - 2;
    while (e) {
        if (e & 1) r = pmul(r, b);
        b = pmul(b, b);
        e >>= 1;
    }
    return r;
}

FieldCtxPtr FieldCtx::make(uint32_t p, std::vector<uint32_t> modulus) {
    if (p <= 2 || !is_prime_u32(p))
        throw std::invalid_argument("FieldCtx: p must be an odd prime > 2");
    if (modulus.size() < 2 || modulus.back() != 1)
        throw std::invalid_argument("FieldCtx: modulus must be monic of degree >= 1");
    for (uint32_t c : modulus)
        if (c >= p) throw std::invalid_argument("FieldCtx: modulus coefficient out of range");
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->s_ = uint32_t(modulus.size() - 1);
    ctx->mod_ = std::move(modulus);
    ctx->q_ = 1;
    for (uint32_t i = 0; i < ctx->s_; ++i) ctx->q_ *= p;
    ctx->build_tables();
    if (ctx->s_ > 1 && !is_irreducible_fp(p, ctx->mod_))
        throw std::invalid_argument("FieldCtx: modulus is not irreducible");
    return ctx;
}

FieldCtxPtr FieldCtx::make_ext(uint32_t p, uint32_t s, uint64_t seed) {
    if (p <= 2 || !is_prime_u32(p))
        throw std::invalid_argument("FieldCtx: p must be an odd prime > 2");
    if (s == 0) throw std::invalid_argument("FieldCtx: s must be >= 1");
    if (s == 1) return make(p, {0, 1});  // F_p itself; modulus t
    Prng rng(seed);
    for (;;) {
        std::vector<uint32_t> f(s + 1, 0);
        f[s] = 1;
        for (uint32_t i = 0; i < s; ++i) f[i] = uint32_t(rng.below(p));
        if (is_irreducible_fp(p, f)) return make(p, std::move(f));
    }
}

void FieldCtx::build_tables() {
    // reduction of t^{s+j} for j = 0..s-2
    red_.clear();
    CoeffVec cur(s_);
    for (uint32_t i = 0; i < s_; ++i) cur[i] = psub(0, mod_[i]);  // t^s
    red_.push_back(cur);
    for (uint32_t j = 1; j + 1 < s_; ++j) {
        CoeffVec nxt(s_, 0);
        uint32_t hi = cur[s_ - 1];
        for (uint32_t i = s_ - 1; i > 0; --i) nxt[i] = cur[i - 1];
        nxt[0] = 0;
        if (hi)
            for (uint32_t i = 0; i < s_; ++i) nxt[i] = padd(nxt[i], pmul(hi, red_[0][i]));
        red_.push_back(nxt);
        cur = nxt;
    }
    // Frobenius images of the power basis
    frob_.assign(s_, CoeffVec(s_, 0));
    frob_[0][0] = 1;
    if (s_ > 1) {
        FieldElem t = FieldElem(this, [&] { CoeffVec g(s_, 0); g[1] = 1; return g; }());
        FieldElem tp = t.pow(p_);
        FieldElem acc = one();
        for (uint32_t i = 0; i < s_; ++i) {
            frob_[i] = acc.coeffs();
            acc = acc * tp;
        }
    }
}

FieldElem FieldCtx::zero() const { return FieldElem(this, CoeffVec(s_, 0)); }

FieldElem FieldCtx::one() const {
    CoeffVec c(s_, 0);
    c[0] = 1;
    return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::from_int(int64_t v) const {
    int64_t m = v % (int64_t)p_;
    if (m < 0) m += p_;
    CoeffVec c(s_, 0);
    c[0] = uint32_t(m);
    return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::gen() const {
    CoeffVec c(s_, 0);
    if (s_ == 1) throw std::logic_error("FieldCtx::gen: prime field has no generator symbol");
    c[1] = 1;
    return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::from_coeffs(CoeffVec c) const {
    c.resize(s_, 0);
    for (auto& v : c) v %= p_;
    return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::from_index(uint64_t idx) const {
    CoeffVec c(s_, 0);
    for (uint32_t i = 0; i < s_; ++i) {
        c[i] = uint32_t(idx % p_);
        idx /= p_;
    }
    return FieldElem(this, std::move(c));
}

uint64_t FieldCtx::to_index(const FieldElem& a) const {
    uint64_t idx = 0;
    for (size_t i = a.coeffs().size(); i-- > 0;) idx = idx * p_ + a.coeffs()[i];
    return idx;
}

FieldElem FieldCtx::random(Prng& rng) const { return from_index(rng.below(q_)); }

FieldElem FieldCtx::frobenius(const FieldElem& a, int64_t k) const {
    int64_t r = k % (int64_t)s_;
    if (r < 0) r += s_;
    FieldElem cur = a;
    for (int64_t n = 0; n < r; ++n) {
        CoeffVec out(s_, 0);
        for (uint32_t i = 0; i < s_; ++i) {
            if (!cur.coeffs()[i]) continue;
            for (uint32_t j = 0; j < s_; ++j)
                out[j] = padd(out[j], pmul(cur.coeffs()[i], frob_[i][j]));
        }
        cur = FieldElem(this, std::move(out));
    }
    return cur;
}

std::vector<FieldElem> FieldCtx::all_elements() const {
    std::vector<FieldElem> out;
    out.reserve(q_);
    for (uint64_t i = 0; i < q_; ++i) out.push_back(from_index(i));
    return out;
}

std::string FieldCtx::modulus_str() const {
    std::string out;
    for (size_t i = mod_.size(); i-- > 0;) {
        if (!mod_[i]) continue;
        if (!out.empty()) out += "+";
        if (i == 0) { out += std::to_string(mod_[i]); continue; }
        if (mod_[i] != 1) out += std::to_string(mod_[i]) + "*";
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

// ----------------------------------------------------------- FieldEmbedding

FieldEmbedding::FieldEmbedding(FieldCtxPtr src, FieldCtxPtr dst) : src_(src), dst_(dst) {
    if (src->p() != dst->p() || dst->s() % src->s() != 0)
        throw std::invalid_argument("FieldEmbedding: no embedding exists");
    Poly f = Poly::from_fp_coeffs(dst.get(), src->modulus());
    std::vector<FieldElem> roots = poly_roots_in_field(f);
    if (src->s() > 1 && roots.empty())
        throw std::logic_error("FieldEmbedding: modulus has no root in target");
    FieldElem r = src->s() == 1 ? dst->zero() : *std::min_element(roots.begin(), roots.end());
    gen_pow_.clear();
    FieldElem acc = dst->one();
    for (uint32_t i = 0; i < src->s(); ++i) {
        gen_pow_.push_back(acc);
        acc = acc * r;
    }
}

FieldElem FieldEmbedding::operator()(const FieldElem& a) const {
    FieldElem out = dst_->zero();
    for (uint32_t i = 0; i < src_->s(); ++i)
        if (a.coeffs()[i]) out += dst_->from_int(a.coeffs()[i]) * gen_pow_[i];
    return out;
}

}  // namespace parhiggs
