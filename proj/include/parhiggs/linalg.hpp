#pragma once

#include <optional>
#include <vector>

#include "parhiggs/field.hpp"

namespace parhiggs {

/// Dense matrix over F_q, row major.  Small sizes; exact Gaussian
/// elimination only.
class FqMatrix {
  public:
    FqMatrix() = default;
    FqMatrix(const FieldCtx* ctx, int rows, int cols)
        : ctx_(ctx), rows_(rows), cols_(cols), a_(size_t(rows) * cols, ctx->zero()) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldCtx* ctx() const { return ctx_; }
    FieldElem& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const FieldElem& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    int rank() const;
    /// basis of the right kernel {v : A v = 0}
    std::vector<std::vector<FieldElem>> kernel_basis() const;
    /// one solution of A x = b, if any
    std::optional<std::vector<FieldElem>> solve(const std::vector<FieldElem>& b) const;
    /// all solutions: particular + kernel basis
    struct SolutionSet {
        bool consistent = false;
        std::vector<FieldElem> particular;
        std::vector<std::vector<FieldElem>> kernel;
    };
    SolutionSet solve_all(const std::vector<FieldElem>& b) const;

  private:
    const FieldCtx* ctx_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<FieldElem> a_;
};

}  // namespace parhiggs
