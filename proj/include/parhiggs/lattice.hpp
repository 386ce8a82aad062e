#pragma once

#include <optional>
#include <vector>

#include "parhiggs/matrix.hpp"

namespace parhiggs {

/// Rank-2 locally free subsheaf of k(x)^2 described by local regularity
/// conditions.  v is a local section near a finite site iff cond * v is
/// regular there; near infinity iff (inf_cond * v)(1/u) is regular at u = 0.
/// Everything away from the sites is plain regularity.
struct GluedLattice {
    const FieldCtx* ctx = nullptr;
    struct Site {
        FieldElem pt;
        RfMatrix cond;  // 2x2, invertible as a rational matrix
    };
    std::vector<Site> sites;
    RfMatrix inf_cond;  // 2x2

    /// total degree: sum of ord_pt det(cond) plus ord_{u=0} det(inf_cond)
    int64_t degree() const;
};

/// Basis of H^0(L(-k inf)) by exact linear algebra over F_q.
std::vector<std::vector<RatFunc>> h0_basis(const GluedLattice& L, int64_t k);
int64_t h0_dim(const GluedLattice& L, int64_t k);

struct SplitResult {
    int64_t deg1 = 0, deg2 = 0;  // deg1 >= deg2
    RfMatrix frame;              // columns generate: L = frame * (O(deg1) + O(deg2))
};

/// Splitting type of a glued rank-2 bundle on P^1: finds the maximal
/// destabilizing degree by scanning h^0 of twists downward from the bound,
/// completes a frame, and checks the h^0 profile against
/// O(deg1) + O(deg2).  B widens the scan window beyond the built-in bound.
SplitResult splitting_type(const GluedLattice& L, int64_t B = 0);

/// Fast representation for the inverse-Cartier gluing: all finite sites are
/// unipotent lower conditions (v2 + tau * v1 regular) and the infinity
/// condition is diagonal with degree bounds (bound1, bound2) on (v1, v2).
struct UnipotentLattice {
    const FieldCtx* ctx = nullptr;
    struct Site {
        FieldElem pt;
        RatFunc tau;
    };
    std::vector<Site> sites;
    int64_t bound1 = 0, bound2 = 0;

    int64_t degree() const { return bound1 + bound2; }
    GluedLattice to_glued() const;
};

int64_t h0_dim(const UnipotentLattice& L, int64_t k);
std::vector<std::vector<RatFunc>> h0_basis(const UnipotentLattice& L, int64_t k);
SplitResult splitting_type(const UnipotentLattice& L);

/// Adapted frame for a colength-one flag V = L0 with sublattice L1 obtained
/// by dropping the component-c infinity bound by one: returns the frame with
/// the dropping generator first, i.e. L0 = O(n_drop) b_drop + O(n_keep)
/// b_keep and L1 = O(n_drop - 1) b_drop + O(n_keep) b_keep.
struct FlagSplit {
    int64_t n_drop = 0, n_keep = 0;
    RfMatrix frame;  // column 0 = dropper, column 1 = keeper
};
FlagSplit flag_split(const UnipotentLattice& L0, int drop_component);

}  // namespace parhiggs
