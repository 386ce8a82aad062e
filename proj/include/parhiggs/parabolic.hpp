#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parhiggs/field.hpp"
#include "parhiggs/rational.hpp"

namespace parhiggs {

/// A point of P^1(F_q), either finite or the point at infinity.
struct LinePoint {
    bool inf = false;
    FieldElem v;  // meaningful when !inf

    static LinePoint infinity() { return {true, FieldElem()}; }
    static LinePoint finite(FieldElem a) { return {false, std::move(a)}; }
    friend bool operator==(const LinePoint& a, const LinePoint& b) {
        return a.inf == b.inf && (a.inf || a.v == b.v);
    }
    std::string str() const { return inf ? "inf" : v.str(); }
};

/// The m-marked projective line.  The weighted point x_1 is normalized to
/// infinity and stored at index 0; all other marked points are finite.
/// N is the weight denominator, coprime to p.
class MarkedLine {
  public:
    MarkedLine(FieldCtxPtr ctx, std::vector<LinePoint> points, uint32_t N);

    const FieldCtxPtr& ctx_ptr() const { return ctx_; }
    const FieldCtx* ctx() const { return ctx_.get(); }
    const std::vector<LinePoint>& points() const { return pts_; }
    size_t m() const { return pts_.size(); }
    uint32_t N() const { return N_; }
    const LinePoint& point(size_t i) const { return pts_[i]; }
    bool is_marked_finite(const FieldElem& a) const;
    std::optional<size_t> index_of(const LinePoint& pt) const;
    /// true if 0 is among the marked points
    bool zero_marked() const;

    /// the line with every finite marked point replaced by sigma^{k}(point)
    MarkedLine frobenius_shift(int64_t k) const;

    friend bool operator==(const MarkedLine& a, const MarkedLine& b) {
        return a.ctx_.get() == b.ctx_.get() && a.N_ == b.N_ && a.pts_ == b.pts_;
    }

  private:
    FieldCtxPtr ctx_;
    std::vector<LinePoint> pts_;
    uint32_t N_;
};

using MarkedLinePtr = std::shared_ptr<const MarkedLine>;

/// same marked data over a larger field
MarkedLinePtr embed_line(const MarkedLine& line, const FieldEmbedding& emb);

/// Split parabolic line bundle: an integer degree (the weight-0 lattice is
/// O(deg)) plus a weight in [0,1) per marked point, indexed like the line's
/// point list.
struct ParLine {
    int64_t deg = 0;
    std::vector<Rational> weights;  // size = line.m(), entries in [0,1)

    static ParLine trivial(size_t m) { return {0, std::vector<Rational>(m)}; }
    /// O(gamma * x_1), gamma rational: integer part to deg, fraction to the
    /// weight at index 0
    static ParLine shifted(size_t m, const Rational& gamma);
};

Rational par_degree(const ParLine& L);
ParLine par_tensor(const ParLine& a, const ParLine& b);
ParLine par_dual(const ParLine& a);
/// the weight-0 lattice degree of L(-gamma * x_1)
int64_t lattice_deg_twisted(const ParLine& L, const Rational& gamma);

/// dim Hom_par(L1, L2) = h^0 of the weight-0 lattice of L1^v (x) L2
int64_t par_hom_dim(const ParLine& a, const ParLine& b);

/// Split parabolic bundle on a marked line: an ordered direct sum of
/// parabolic line bundles.
struct ParBundle {
    MarkedLinePtr line;
    std::vector<ParLine> summands;

    size_t rank() const { return summands.size(); }
};

Rational par_degree(const ParBundle& V);

/// Summand of an equivariant split bundle on the degree-N cover: a degree
/// plus the monomial class of its generating frame vector under the cyclic
/// action.
struct EquivSummand {
    int64_t deg = 0;
    int64_t cls = 0;  // class mod N of the generator
};

/// Pullback of a split parabolic bundle along u -> u^N (branch points 0 and
/// infinity).  Weights must be supported on branch points and have
/// denominator dividing N; the result has trivial parabolic structure and
/// is reported as a list of equivariant summands (canonical frame, class 0).
std::vector<EquivSummand> cyclic_pullback_bundle(const ParBundle& V);

/// Biswas' kernel-filtration construction of the pullback, computed on
/// per-summand local order vectors; must agree with cyclic_pullback_bundle.
std::vector<EquivSummand> biswas_pullback(const ParBundle& V);

/// Invariant-sections pushforward along u -> u^N, quasi-inverse to the
/// pullback.  Takes the equivariant summand data upstairs and the marked
/// line downstairs.
ParBundle cyclic_pushforward(const MarkedLinePtr& line, const std::vector<EquivSummand>& W);

}  // namespace parhiggs
