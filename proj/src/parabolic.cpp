#include "parhiggs/parabolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace parhiggs {

MarkedLine::MarkedLine(FieldCtxPtr ctx, std::vector<LinePoint> points, uint32_t N)
    : ctx_(std::move(ctx)), pts_(std::move(points)), N_(N) {
    if (pts_.size() < 3)
        throw std::invalid_argument("MarkedLine: need m >= 3 marked points");
    if (!pts_[0].inf)
        throw std::invalid_argument("MarkedLine: the weighted point must be at infinity");
    for (size_t i = 1; i < pts_.size(); ++i) {
        if (pts_[i].inf) throw std::invalid_argument("MarkedLine: duplicate point at infinity");
        for (size_t j = 1; j < i; ++j)
            if (pts_[i] == pts_[j])
                throw std::invalid_argument("MarkedLine: marked points must be distinct");
    }
    if (N_ == 0 || ctx_->p() % N_ == 0 || (N_ % ctx_->p() == 0))
        throw std::invalid_argument("MarkedLine: need gcd(p, N) = 1");
}

bool MarkedLine::is_marked_finite(const FieldElem& a) const {
    for (size_t i = 1; i < pts_.size(); ++i)
        if (pts_[i].v == a) return true;
    return false;
}

std::optional<size_t> MarkedLine::index_of(const LinePoint& pt) const {
    for (size_t i = 0; i < pts_.size(); ++i)
        if (pts_[i] == pt) return i;
    return std::nullopt;
}

bool MarkedLine::zero_marked() const {
    for (size_t i = 1; i < pts_.size(); ++i)
        if (pts_[i].v.is_zero()) return true;
    return false;
}

MarkedLine MarkedLine::frobenius_shift(int64_t k) const {
    std::vector<LinePoint> pts = pts_;
    for (auto& pt : pts)
        if (!pt.inf) pt.v = ctx_->frobenius(pt.v, k);
    return MarkedLine(ctx_, std::move(pts), N_);
}

MarkedLinePtr embed_line(const MarkedLine& line, const FieldEmbedding& emb) {
    std::vector<LinePoint> pts = line.points();
    for (auto& pt : pts)
        if (!pt.inf) pt.v = emb(pt.v);
    return std::make_shared<const MarkedLine>(emb.dst_ptr(), std::move(pts), line.N());
}

// -------------------------------------------------------------------- lines

ParLine ParLine::shifted(size_t m, const Rational& gamma) {
    ParLine L;
    L.deg = gamma.floor();
    L.weights.assign(m, Rational(0));
    L.weights[0] = gamma.frac();
    return L;
}

Rational par_degree(const ParLine& L) {
    Rational d(L.deg);
    for (const auto& w : L.weights) d += w;
    return d;
}

ParLine par_tensor(const ParLine& a, const ParLine& b) {
    if (a.weights.size() != b.weights.size())
        throw std::invalid_argument("par_tensor: different marked lines");
    ParLine r;
    r.deg = a.deg + b.deg;
    r.weights.resize(a.weights.size());
    for (size_t i = 0; i < r.weights.size(); ++i) {
        Rational w = a.weights[i] + b.weights[i];
        r.deg += w.floor();  // carry into the lattice degree
        r.weights[i] = w.frac();
    }
    return r;
}

ParLine par_dual(const ParLine& a) {
    ParLine r;
    r.deg = -a.deg;
    r.weights.resize(a.weights.size());
    for (size_t i = 0; i < a.weights.size(); ++i) {
        if (a.weights[i] == Rational(0)) {
            r.weights[i] = Rational(0);
        } else {
            r.deg -= 1;
            r.weights[i] = Rational(1) - a.weights[i];
        }
    }
    return r;
}

int64_t lattice_deg_twisted(const ParLine& L, const Rational& gamma) {
    return L.deg + (L.weights[0] - gamma).floor();
}

int64_t par_hom_dim(const ParLine& a, const ParLine& b) {
    ParLine h = par_tensor(par_dual(a), b);
    return std::max<int64_t>(0, h.deg + 1);
}

Rational par_degree(const ParBundle& V) {
    Rational d(0);
    for (const auto& L : V.summands) d += par_degree(L);
    return d;
}

// ----------------------------------------------------------------- pullback

namespace {

void check_pullback_weights(const ParBundle& V) {
    uint32_t N = V.line->N();
    for (const auto& L : V.summands) {
        for (size_t i = 0; i < L.weights.size(); ++i) {
            const Rational& w = L.weights[i];
            if (w == Rational(0)) continue;
            if ((int64_t)N % w.den != 0)
                throw std::invalid_argument("pullback: weight denominator does not divide N");
            if (i != 0)
                throw std::invalid_argument(
                    "pullback: weights live at the branch point at infinity only");
        }
    }
}

}  // namespace

std::vector<EquivSummand> cyclic_pullback_bundle(const ParBundle& V) {
    check_pullback_weights(V);
    uint32_t N = V.line->N();
    std::vector<EquivSummand> out;
    out.reserve(V.summands.size());
    for (const auto& L : V.summands) {
        // f^*(L(gamma inf)) = (f^* L)(N gamma inf): the fractional twist
        // becomes integral, so the result has trivial parabolic structure
        // with degree N * par_degree(L) in the canonical class-0 frame
        Rational e = Rational(N) * par_degree(L);
        if (!e.is_integer())
            throw std::logic_error("cyclic_pullback_bundle: non-integral pullback degree");
        out.push_back({e.num, 0});
    }
    return out;
}

std::vector<EquivSummand> biswas_pullback(const ParBundle& V) {
    check_pullback_weights(V);
    const auto& line = *V.line;
    uint32_t N = line.N();
    size_t m = line.m();
    std::vector<EquivSummand> out;
    out.reserve(V.summands.size());
    for (const auto& L : V.summands) {
        // local orders of E^0 = f^*(L_0 (x) O(D)) at the preimages of each
        // marked point; ramified points (inf, and 0 when marked) see N-fold
        // multiplication, etale points keep multiplicity 1
        std::vector<int64_t> ord(m);
        std::vector<bool> ram(m);
        for (size_t i = 0; i < m; ++i) {
            ram[i] = (i == 0) || line.point(i).v.is_zero();
            ord[i] = ram[i] ? (int64_t)N : 1;  // the O(D) overshoot
        }
        ord[0] += (int64_t)N * L.deg;  // the lattice itself twists at inf only

        // kernel filtration per marked point: weights 0 <= a^1 < ... < 1,
        // E^{j+1} = ker(E^j -> quotient supported on (N - m^{j+1}) D'_ram or
        // (1 - a^{j+1})-scaled etale divisor); for a line there is a single
        // weight a^1 = w_i, and the step cuts the local order by
        // (N - N w_i) at ramified points, by 1 at etale (w_i = 0) points
        for (size_t i = 0; i < m; ++i) {
            Rational w = L.weights[i];
            if (ram[i]) {
                Rational cut = Rational(N) * (Rational(1) - w);
                if (!cut.is_integer())
                    throw std::logic_error("biswas_pullback: non-integral step");
                ord[i] -= cut.num;
            } else {
                ord[i] -= 1;
            }
        }
        // all local orders away from inf must now vanish (trivial parabolic
        // structure); the remaining inf order is the pullback degree
        for (size_t i = 1; i < m; ++i)
            if (ord[i] != 0)
                throw std::logic_error("biswas_pullback: residual finite twist");
        out.push_back({ord[0], 0});
    }
    return out;
}

ParBundle cyclic_pushforward(const MarkedLinePtr& line, const std::vector<EquivSummand>& W) {
    uint32_t N = line->N();
    ParBundle out;
    out.line = line;
    out.summands.reserve(W.size());
    for (const auto& s : W) {
        int64_t khat = ((-s.cls) % (int64_t)N + N) % N;
        // invariant sections h(x) u^khat b with deg <= s.deg:
        // N deg_x h + khat <= deg
        Rational q(s.deg - khat, N);
        ParLine L;
        L.deg = q.floor();
        L.weights.assign(line->m(), Rational(0));
        L.weights[0] = q.frac();
        out.summands.push_back(std::move(L));
    }
    return out;
}

}  // namespace parhiggs
