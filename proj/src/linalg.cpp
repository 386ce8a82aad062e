#include "parhiggs/linalg.hpp"

namespace parhiggs {

namespace {

struct Rref {
    std::vector<std::vector<FieldElem>> m;  // reduced rows (augmented allowed)
    std::vector<int> pivot_col;             // per reduced row
};

Rref rref_of(const FqMatrix& A, const std::vector<FieldElem>* rhs) {
    const FieldCtx* k = A.ctx();
    int n = A.rows(), m = A.cols();
    int width = m + (rhs ? 1 : 0);
    std::vector<std::vector<FieldElem>> rows(n, std::vector<FieldElem>(width, k->zero()));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < m; ++c) rows[r][c] = A.at(r, c);
        if (rhs) rows[r][m] = (*rhs)[r];
    }
    Rref out;
    int row = 0;
    for (int col = 0; col < m && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (!rows[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[row]);
        FieldElem inv = rows[row][col].inv();
        for (int c = col; c < width; ++c) rows[row][c] = rows[row][c] * inv;
        for (int r = 0; r < n; ++r) {
            if (r == row || rows[r][col].is_zero()) continue;
            FieldElem f = rows[r][col];
            for (int c = col; c < width; ++c) rows[r][c] = rows[r][c] - f * rows[row][c];
        }
        out.pivot_col.push_back(col);
        ++row;
    }
    rows.resize(n);
    out.m = std::move(rows);
    return out;
}

}  // namespace

int FqMatrix::rank() const {
    return (int)rref_of(*this, nullptr).pivot_col.size();
}

std::vector<std::vector<FieldElem>> FqMatrix::kernel_basis() const {
    const FieldCtx* k = ctx_;
    Rref r = rref_of(*this, nullptr);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : r.pivot_col) is_pivot[c] = true;
    std::vector<std::vector<FieldElem>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElem> v(cols_, k->zero());
        v[free] = k->one();
        for (size_t pr = 0; pr < r.pivot_col.size(); ++pr)
            v[r.pivot_col[pr]] = -r.m[pr][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

FqMatrix::SolutionSet FqMatrix::solve_all(const std::vector<FieldElem>& b) const {
    const FieldCtx* k = ctx_;
    Rref r = rref_of(*this, &b);
    SolutionSet out;
    // consistency: no row 0 = 1
    for (int row = (int)r.pivot_col.size(); row < rows_; ++row)
        if (!r.m[row][cols_].is_zero()) return out;
    out.consistent = true;
    out.particular.assign(cols_, k->zero());
    for (size_t pr = 0; pr < r.pivot_col.size(); ++pr)
        out.particular[r.pivot_col[pr]] = r.m[pr][cols_];
    out.kernel = kernel_basis();
    return out;
}

std::optional<std::vector<FieldElem>> FqMatrix::solve(const std::vector<FieldElem>& b) const {
    auto s = solve_all(b);
    if (!s.consistent) return std::nullopt;
    return s.particular;
}

}  // namespace parhiggs
