#include "parhiggs/lattice.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "parhiggs/linalg.hpp"

namespace parhiggs {

namespace {

int pole_order_at(const RatFunc& f, const FieldElem& a) {
    int o = f.ord_at(a);
    return o < 0 ? -o : 0;
}

/// growth order at infinity (degree of the entry as x -> inf)
int iord(const RatFunc& f) {
    if (f.is_zero()) return -(1 << 20);
    return -f.ord_at_inf();
}

}  // namespace

int64_t GluedLattice::degree() const {
    int64_t d = 0;
    for (const auto& s : sites) {
        RatFunc dt = s.cond.det();
        d += dt.ord_at(s.pt);
    }
    d += inf_cond.det().ord_at_inf();
    return d;
}

std::vector<std::vector<RatFunc>> h0_basis(const GluedLattice& L, int64_t k) {
    const FieldCtx* f = L.ctx;
    // allowed pole of v at each site from cond^{-1}
    Poly delta = Poly::constant(f->one());
    std::vector<int> site_pole;
    for (const auto& s : L.sites) {
        RfMatrix inv = s.cond.inverse();
        int r = 0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r = std::max(r, pole_order_at(inv.at(i, j), s.pt));
        site_pole.push_back(r);
        for (int i = 0; i < r; ++i) delta *= Poly::linear_root(s.pt);
    }
    // degree bound per component from inf_cond^{-1}
    RfMatrix cinv = L.inf_cond.inverse();
    int64_t D[2];
    for (int j = 0; j < 2; ++j) {
        int g = std::max(iord(cinv.at(j, 0)), iord(cinv.at(j, 1)));
        D[j] = delta.deg() + std::max<int64_t>(0, g - k);
    }
    // basis candidates e_j x^i / delta
    struct Cand {
        int comp;
        int64_t pow;
    };
    std::vector<Cand> cands;
    for (int j = 0; j < 2; ++j)
        for (int64_t i = 0; i <= D[j]; ++i) cands.push_back({j, i});
    if (cands.empty()) return {};

    // condition rows: per site per matrix row, Laurent coefficients of
    // negative powers; at infinity, coefficients of x^t for t >= -k+1
    std::vector<std::vector<FieldElem>> cols;
    size_t nrows = 0;
    std::vector<int> site_depth(L.sites.size() * 2, 0);
    for (size_t si = 0; si < L.sites.size(); ++si)
        for (int e = 0; e < 2; ++e) {
            int d = 0;
            for (int j = 0; j < 2; ++j)
                d = std::max(d, pole_order_at(L.sites[si].cond.at(e, j), L.sites[si].pt));
            site_depth[si * 2 + e] = d + site_pole[si];
        }
    int64_t Tmax = 0;
    for (int e = 0; e < 2; ++e)
        for (int j = 0; j < 2; ++j)
            Tmax = std::max(Tmax, (int64_t)iord(L.inf_cond.at(e, j)) + D[j] - delta.deg());
    int64_t inf_lo = -k + 1;
    int64_t inf_rows = std::max<int64_t>(0, Tmax - inf_lo + 1);

    for (const auto& c : cands) {
        std::vector<FieldElem> col;
        RatFunc b(Poly::monomial(f->one(), (size_t)c.pow), delta);
        for (size_t si = 0; si < L.sites.size(); ++si) {
            for (int e = 0; e < 2; ++e) {
                int depth = site_depth[si * 2 + e];
                RatFunc g = L.sites[si].cond.at(e, c.comp) * b;
                if (depth > 0) {
                    auto cf = g.laurent_at(L.sites[si].pt, depth, -1);
                    for (int t = 0; t < depth; ++t) col.push_back(cf[t]);
                }
            }
        }
        for (int e = 0; e < 2; ++e) {
            RatFunc g = L.inf_cond.at(e, c.comp) * b;
            if (inf_rows > 0) {
                auto cf = g.expansion_at_inf((int)Tmax, (int)inf_lo);
                for (auto& v : cf) col.push_back(v);
            }
        }
        nrows = col.size();
        cols.push_back(std::move(col));
    }

    FqMatrix M(f, (int)nrows, (int)cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < nrows; ++i) M.at((int)i, (int)j) = cols[j][i];
    auto ker = M.kernel_basis();

    std::vector<std::vector<RatFunc>> out;
    for (const auto& kv : ker) {
        std::vector<RatFunc> v{RatFunc::zero(f), RatFunc::zero(f)};
        for (size_t j = 0; j < cands.size(); ++j) {
            if (kv[j].is_zero()) continue;
            v[cands[j].comp] += RatFunc(Poly::monomial(kv[j], (size_t)cands[j].pow), delta);
        }
        out.push_back(std::move(v));
    }
    return out;
}

int64_t h0_dim(const GluedLattice& L, int64_t k) { return (int64_t)h0_basis(L, k).size(); }

namespace {

SplitResult split_from_scan(const FieldCtx* f, int64_t deg, int64_t kmax, int64_t kmin,
                            const std::function<std::vector<std::vector<RatFunc>>(int64_t)>& basis_at) {
    int64_t lam1 = 0;
    std::vector<RatFunc> b1;
    bool found = false;
    for (int64_t k = kmax; k >= kmin; --k) {
        auto bs = basis_at(k);
        if (!bs.empty()) {
            lam1 = k;
            b1 = bs.front();
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("splitting_type: no sections found in scan window");
    int64_t lam2 = deg - lam1;
    auto bs2 = basis_at(lam2);
    RfMatrix M(f, 2, 2);
    M.at(0, 0) = b1[0];
    M.at(1, 0) = b1[1];
    bool ok = false;
    for (const auto& cand : bs2) {
        RatFunc det = b1[0] * cand[1] - b1[1] * cand[0];
        if (!det.is_zero()) {
            M.at(0, 1) = cand[0];
            M.at(1, 1) = cand[1];
            ok = true;
            break;
        }
    }
    if (!ok) throw std::logic_error("splitting_type: could not complete the frame");
    // h^0 profile must match O(lam1) + O(lam2)
    auto expect = [&](int64_t k) {
        return std::max<int64_t>(0, lam1 - k + 1) + std::max<int64_t>(0, lam2 - k + 1);
    };
    for (int64_t k : {lam1 + 1, lam1, lam2, lam2 - 1}) {
        int64_t got = (int64_t)basis_at(k).size();
        if (got != expect(k))
            throw std::logic_error("splitting_type: inconsistent h^0 profile");
    }
    SplitResult r;
    r.deg1 = lam1;
    r.deg2 = lam2;
    r.frame = M;
    return r;
}

}  // namespace

SplitResult splitting_type(const GluedLattice& L, int64_t B) {
    RfMatrix cinv = L.inf_cond.inverse();
    int64_t kmax = 0;
    for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) kmax = std::max<int64_t>(kmax, iord(cinv.at(j, l)));
    kmax += B + 1;
    int64_t deg = L.degree();
    int64_t kmin = deg - kmax;
    return split_from_scan(L.ctx, deg, kmax, kmin,
                           [&](int64_t k) { return h0_basis(L, k); });
}

// --------------------------------------------------------------- fast path

GluedLattice UnipotentLattice::to_glued() const {
    GluedLattice g;
    g.ctx = ctx;
    for (const auto& s : sites) {
        RfMatrix c = RfMatrix::identity(ctx, 2);
        c.at(1, 0) = s.tau;
        g.sites.push_back({s.pt, c});
    }
    g.inf_cond = RfMatrix(ctx, 2, 2);
    auto xpow = [&](int64_t e) {  // x^{-e} as a rational function
        if (e >= 0)
            return RatFunc(Poly::constant(ctx->one()), Poly::monomial(ctx->one(), (size_t)e));
        return RatFunc(Poly::monomial(ctx->one(), (size_t)(-e)));
    };
    g.inf_cond.at(0, 0) = xpow(bound1);
    g.inf_cond.at(1, 1) = xpow(bound2);
    return g;
}

namespace {

/// tail data: coefficients of x^{-t}, t = 1..depth, of the summed principal
/// parts of tau_site * x^i over all sites
struct TailTable {
    std::vector<std::vector<FieldElem>> coef;  // coef[i][t-1]
};

TailTable build_tails(const UnipotentLattice& L, int64_t imax, int64_t depth) {
    const FieldCtx* f = L.ctx;
    TailTable T;
    T.coef.assign((size_t)std::max<int64_t>(0, imax + 1),
                  std::vector<FieldElem>((size_t)depth, f->zero()));
    for (const auto& s : L.sites) {
        if (s.tau.is_zero()) continue;
        for (int64_t i = 0; i <= imax; ++i) {
            RatFunc prod = s.tau * RatFunc(Poly::monomial(f->one(), (size_t)i));
            RatFunc pp = prod.principal_part_at(s.pt);
            if (pp.is_zero()) continue;
            auto e = pp.expansion_at_inf(-1, (int)-depth);
            for (int64_t t = 1; t <= depth; ++t) {
                T.coef[(size_t)i][(size_t)(t - 1)] += e[(size_t)(t - 1)];
            }
        }
    }
    return T;
}

}  // namespace

std::vector<std::vector<RatFunc>> h0_basis(const UnipotentLattice& L, int64_t k) {
    const FieldCtx* f = L.ctx;
    int64_t n1 = L.bound1 - k, n2 = L.bound2 - k;
    std::vector<std::vector<RatFunc>> out;
    auto v2_for = [&](const Poly& v1) {
        RatFunc v2 = RatFunc::zero(f);
        for (const auto& s : L.sites) {
            if (s.tau.is_zero()) continue;
            v2 -= (s.tau * RatFunc(v1)).principal_part_at(s.pt);
        }
        return v2;
    };
    if (n2 >= -1) {
        // no tail conditions
        for (int64_t i = 0; i <= n1; ++i) {
            Poly v1 = Poly::monomial(f->one(), (size_t)i);
            out.push_back({RatFunc(v1), v2_for(v1)});
        }
        for (int64_t i = 0; i <= n2; ++i)
            out.push_back({RatFunc::zero(f), RatFunc(Poly::monomial(f->one(), (size_t)i))});
        return out;
    }
    if (n1 < 0) return out;
    int64_t depth = -n2 - 1;
    TailTable T = build_tails(L, n1, depth);
    FqMatrix M(f, (int)depth, (int)(n1 + 1));
    for (int64_t i = 0; i <= n1; ++i)
        for (int64_t t = 1; t <= depth; ++t)
            M.at((int)(t - 1), (int)i) = T.coef[(size_t)i][(size_t)(t - 1)];
    for (const auto& kv : M.kernel_basis()) {
        std::vector<FieldElem> c(kv.begin(), kv.end());
        Poly v1(f, std::move(c));
        out.push_back({RatFunc(v1), v2_for(v1)});
    }
    return out;
}

int64_t h0_dim(const UnipotentLattice& L, int64_t k) {
    int64_t n1 = L.bound1 - k, n2 = L.bound2 - k;
    if (n2 >= -1)
        return std::max<int64_t>(0, n1 + 1) + std::max<int64_t>(0, n2 + 1);
    if (n1 < 0) return 0;
    int64_t depth = -n2 - 1;
    TailTable T = build_tails(L, n1, depth);
    FqMatrix M(L.ctx, (int)depth, (int)(n1 + 1));
    for (int64_t i = 0; i <= n1; ++i)
        for (int64_t t = 1; t <= depth; ++t)
            M.at((int)(t - 1), (int)i) = T.coef[(size_t)i][(size_t)(t - 1)];
    return (int64_t)M.kernel_basis().size();
}

SplitResult splitting_type(const UnipotentLattice& L) {
    int64_t kmax = std::max(L.bound1, L.bound2);
    int64_t deg = L.degree();
    return split_from_scan(L.ctx, deg, kmax, deg - kmax,
                           [&](int64_t k) { return h0_basis(L, k); });
}

FlagSplit flag_split(const UnipotentLattice& L0, int drop_component) {
    const FieldCtx* f = L0.ctx;
    SplitResult sp = splitting_type(L0);
    int64_t a0 = sp.deg1, a1 = sp.deg2;
    int64_t Bd = drop_component == 0 ? L0.bound1 : L0.bound2;
    // fiber functional: the x^{Bd} coefficient of the dropped component of a
    // germ f0 b0 + f1 b1 is gamma_0 xi_0 + gamma_1 xi_1 with gamma_i the
    // x^{Bd - a_i} coefficient of (b_i)_{drop}
    FieldElem gam[2];
    for (int i = 0; i < 2; ++i) {
        const RatFunc& entry = sp.frame.at(drop_component, i);
        int64_t want = Bd - (i == 0 ? a0 : a1);
        auto e = entry.expansion_at_inf((int)want, (int)want);
        gam[i] = e[0];
    }
    auto col = [&](int i) {
        std::vector<RatFunc> v{sp.frame.at(0, i), sp.frame.at(1, i)};
        return v;
    };
    std::vector<RatFunc> dropper, keeper;
    int64_t n_drop, n_keep;
    if (gam[0].is_zero() && gam[1].is_zero())
        throw std::logic_error("flag_split: degenerate flag (functional vanishes)");
    if (gam[1].is_zero()) {
        dropper = col(0); n_drop = a0;
        keeper = col(1); n_keep = a1;
    } else if (gam[0].is_zero()) {
        dropper = col(1); n_drop = a1;
        keeper = col(0); n_keep = a0;
    } else if (a0 == a1) {
        dropper = col(0); n_drop = a0;
        keeper = col(0); n_keep = a0;
        for (int e = 0; e < 2; ++e)
            keeper[e] = sp.frame.at(e, 0) * RatFunc::constant(gam[1]) -
                        sp.frame.at(e, 1) * RatFunc::constant(gam[0]);
    } else {
        // a0 > a1, both nonzero: keeper = gam1 x^{a0-a1} b0 - gam0 b1 (deg a1)
        RatFunc xs(Poly::monomial(gam[1], (size_t)(a0 - a1)));
        keeper.assign(2, RatFunc::zero(f));
        for (int e = 0; e < 2; ++e)
            keeper[e] = sp.frame.at(e, 0) * xs - sp.frame.at(e, 1) * RatFunc::constant(gam[0]);
        dropper = col(0);
        n_drop = a0;
        n_keep = a1;
    }
    FlagSplit out;
    out.n_drop = n_drop;
    out.n_keep = n_keep;
    out.frame = RfMatrix(f, 2, 2);
    for (int e = 0; e < 2; ++e) {
        out.frame.at(e, 0) = dropper[e];
        out.frame.at(e, 1) = keeper[e];
    }
    if (out.frame.det().is_zero()) throw std::logic_error("flag_split: singular frame");
    return out;
}

}  // namespace parhiggs
