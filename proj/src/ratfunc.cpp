#include "parhiggs/ratfunc.hpp"

#include <stdexcept>

#include "parhiggs/linalg.hpp"

namespace parhiggs {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

RatFunc::RatFunc(const Poly& num)
    : num_(num), den_(Poly::constant(num.ctx()->one())) {}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(den_.ctx()->one());
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.deg() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    FieldElem lc = den_.lead();
    if (!lc.is_one()) {
        FieldElem inv = lc.inv();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::domain_error("RatFunc::inv of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::derivative() const {
    // (n/d)' = (n'd - nd')/d^2; normalization cancels the common factors
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::compose(const RatFunc& g) const {
    // substitute with common denominator g = P/Q: f(P/Q) =
    // sum num_i P^i Q^{n-i} / Q^n over the analogous denominator sum
    const FieldCtx* k = ctx();
    int n = std::max(num_.deg(), den_.deg());
    if (n < 0) return RatFunc(k);
    std::vector<Poly> ppow{Poly::constant(k->one())}, qpow{Poly::constant(k->one())};
    for (int i = 1; i <= n; ++i) {
        ppow.push_back(ppow.back() * g.num());
        qpow.push_back(qpow.back() * g.den());
    }
    Poly nn = Poly::zero(k), dd = Poly::zero(k);
    for (int i = 0; i <= n; ++i) {
        if (i <= num_.deg() && !num_.coeff(i).is_zero())
            nn += (ppow[i] * qpow[n - i]).scaled(num_.coeff(i));
        if (i <= den_.deg() && !den_.coeff(i).is_zero())
            dd += (ppow[i] * qpow[n - i]).scaled(den_.coeff(i));
    }
    return RatFunc(nn, dd);
}

RatFunc RatFunc::subst_pow(uint32_t k) const {
    return RatFunc(num_.subst_pow(k), den_.subst_pow(k));
}

RatFunc RatFunc::coeff_frobenius(int64_t k) const {
    return RatFunc(num_.coeff_frobenius(k), den_.coeff_frobenius(k));
}

FieldElem RatFunc::eval(const FieldElem& a) const {
    FieldElem d = den_.eval(a);
    if (d.is_zero()) throw std::domain_error("RatFunc::eval at a pole");
    return num_.eval(a) * d.inv();
}

bool RatFunc::has_pole_at(const FieldElem& a) const { return den_.eval(a).is_zero(); }

int RatFunc::ord_at(const FieldElem& a) const {
    if (is_zero()) return 1 << 20;
    auto ord_poly = [&](const Poly& f) {
        int o = 0;
        Poly cur = f, lin = Poly::linear_root(a), q, r;
        for (;;) {
            Poly::divmod(cur, lin, q, r);
            if (!r.is_zero()) return o;
            ++o;
            cur = q;
        }
    };
    return ord_poly(num_) - ord_poly(den_);
}

int RatFunc::ord_at_inf() const {
    if (is_zero()) return 1 << 20;
    return den_.deg() - num_.deg();
}

std::vector<FieldElem> RatFunc::laurent_at(const FieldElem& a, int n, int m) const {
    // shift to 0, strip the pole, then do a truncated power series division
    const FieldCtx* k = ctx();
    Poly ns = num_.shift(a), ds = den_.shift(a);
    int vd = 0;
    {
        std::vector<FieldElem> c(ds.coeffs());
        while (vd <= ds.deg() && c[vd].is_zero()) ++vd;
    }
    // series of ns / (x^vd * unit): coefficients of x^j for j in [-n, m]
    // equivalently (ns / unit) has coefficients shifted by vd
    int need = m + vd + 1;
    std::vector<FieldElem> u(need, k->zero()), nn(need, k->zero());
    for (int i = 0; i < need; ++i) {
        if (i + vd <= ds.deg()) u[i] = ds.coeff(i + vd);
        if (i <= ns.deg()) nn[i] = ns.coeff(i);
    }
    // invert unit series u (u[0] != 0) and multiply
    std::vector<FieldElem> inv(need, k->zero());
    FieldElem u0i = u[0].inv();
    inv[0] = u0i;
    for (int i = 1; i < need; ++i) {
        FieldElem acc = k->zero();
        for (int j = 1; j <= i; ++j) acc += u[j] * inv[i - j];
        inv[i] = -(acc * u0i);
    }
    std::vector<FieldElem> ser(need, k->zero());
    for (int i = 0; i < need; ++i)
        for (int j = 0; i + j < need; ++j) ser[i + j] += nn[i] * inv[j];
    // ser[i] is the coefficient of x^{i - vd}
    std::vector<FieldElem> out;
    out.reserve(n + m + 1);
    for (int j = -n; j <= m; ++j) {
        int idx = j + vd;
        out.push_back(idx >= 0 && idx < need ? ser[idx] : k->zero());
    }
    return out;
}

FieldElem RatFunc::residue_at(const FieldElem& a) const {
    int ord = ord_at(a);
    if (ord >= 0) return ctx()->zero();
    auto c = laurent_at(a, -ord, 0);
    return c[-ord - 1];  // coefficient of (x-a)^{-1}
}

RatFunc RatFunc::principal_part_at(const FieldElem& a) const {
    const FieldCtx* k = ctx();
    int ord = ord_at(a);
    if (ord >= 0) return RatFunc(k);
    int n = -ord;
    auto c = laurent_at(a, n, -1);  // coefficients of (x-a)^{-n} .. (x-a)^{-1}
    // sum_j c[j] (x-a)^{j-n} = (sum_j c[j] (x-a)^j) / (x-a)^n
    Poly lin = Poly::linear_root(a);
    Poly den = Poly::constant(k->one());
    Poly num = Poly::zero(k);
    Poly pw = Poly::constant(k->one());
    for (int j = 0; j < n; ++j) {
        num += pw.scaled(c[j]);
        pw *= lin;
        den *= lin;
    }
    return RatFunc(num, den);
}

std::vector<FieldElem> RatFunc::expansion_at_inf(int hi, int lo) const {
    // substitute x = 1/u: f(1/u) = u^{dd-dn} revn(u)/revd(u) with revd(0)
    // the leading coefficient of den, so the ratio is regular at u = 0.
    // coefficient of x^k = coefficient of u^{-k} overall.
    const FieldCtx* k = ctx();
    if (is_zero()) return std::vector<FieldElem>(hi - lo + 1, k->zero());
    int dn = num_.deg(), dd = den_.deg();
    std::vector<FieldElem> rn(num_.coeffs().rbegin(), num_.coeffs().rend());
    std::vector<FieldElem> rd(den_.coeffs().rbegin(), den_.coeffs().rend());
    RatFunc g(Poly(k, std::move(rn)), Poly(k, std::move(rd)));
    int shift = dd - dn;
    int m0 = std::max(0, -lo - shift);
    auto c = g.laurent_at(k->zero(), 0, m0);  // c[j] = coeff of u^j in g
    std::vector<FieldElem> out;
    out.reserve(hi - lo + 1);
    for (int x = hi; x >= lo; --x) {
        int j = -x - shift;
        out.push_back(j >= 0 && j <= m0 ? c[j] : k->zero());
    }
    return out;
}

std::string RatFunc::str() const {
    if (is_poly()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Poly min_poly_of_mod(const Poly& g, const Poly& f) {
    const FieldCtx* k = f.ctx();
    int n = f.deg();
    if (n <= 0) throw std::invalid_argument("min_poly_of_mod: trivial modulus");
    // Krylov sequence 1, g, g^2, ... mod f until linear dependence
    std::vector<Poly> pows;
    Poly cur = Poly::constant(k->one());
    for (int i = 0; i <= n; ++i) {
        pows.push_back(cur);
        // look for dependence among pows
        FqMatrix M(k, n, (int)pows.size());
        for (size_t j = 0; j < pows.size(); ++j)
            for (int r = 0; r < n; ++r) M.at(r, (int)j) = pows[j].coeff(r);
        auto ker = M.kernel_basis();
        if (!ker.empty()) {
            // last basis vector gives a monic relation of minimal length
            const auto& v = ker.front();
            // normalize so the highest nonzero coefficient is 1
            int topc = (int)pows.size() - 1;
            while (topc >= 0 && v[topc].is_zero()) --topc;
            FieldElem scale = v[topc].inv();
            std::vector<FieldElem> c(topc + 1, k->zero());
            for (int j = 0; j <= topc; ++j) c[j] = v[j] * scale;
            return Poly(k, std::move(c));
        }
        cur = (cur * g) % f;
    }
    throw std::logic_error("min_poly_of_mod: no relation found");
}

}  // namespace parhiggs
