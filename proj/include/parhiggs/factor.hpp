#pragma once

#include <cstdint>
#include <vector>

#include "parhiggs/poly.hpp"

namespace parhiggs {

/// Irreducibility over F_p for a coefficient vector (no FieldCtx needed;
/// used while constructing extension contexts).
bool is_irreducible_fp(uint32_t p, const std::vector<uint32_t>& f);

struct PolyFactor {
    Poly factor;       // monic irreducible
    uint32_t mult;
};

/// Full factorization over F_q: squarefree split, distinct-degree split,
/// then seeded Cantor-Zassenhaus equal-degree split.  Deterministic given
/// the seed.  The product of the factors with multiplicities equals
/// f / lead(f).
std::vector<PolyFactor> poly_factor(const Poly& f, uint64_t seed);

/// Roots of f lying in its coefficient field.
std::vector<FieldElem> poly_roots_in_field(const Poly& f);

/// True iff f is irreducible over its coefficient field F_q.
bool poly_is_irreducible(const Poly& f);

}  // namespace parhiggs
