#include "parhiggs/matrix.hpp"

#include <stdexcept>

namespace parhiggs {

RfMatrix operator+(const RfMatrix& a, const RfMatrix& b) {
    RfMatrix r = a;
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.m_; ++j) r.at(i, j) += b.at(i, j);
    return r;
}

RfMatrix operator-(const RfMatrix& a, const RfMatrix& b) {
    RfMatrix r = a;
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.m_; ++j) r.at(i, j) -= b.at(i, j);
    return r;
}

RfMatrix operator*(const RfMatrix& a, const RfMatrix& b) {
    if (a.m_ != b.n_) throw std::invalid_argument("RfMatrix: shape mismatch");
    RfMatrix r(a.ctx(), a.n_, b.m_);
    for (int i = 0; i < a.n_; ++i)
        for (int kk = 0; kk < a.m_; ++kk) {
            if (a.at(i, kk).is_zero()) continue;
            for (int j = 0; j < b.m_; ++j)
                if (!b.at(kk, j).is_zero()) r.at(i, j) += a.at(i, kk) * b.at(kk, j);
        }
    return r;
}

RfMatrix RfMatrix::scaled(const RatFunc& f) const {
    RfMatrix r = *this;
    for (auto& v : r.a_) v *= f;
    return r;
}

RfMatrix RfMatrix::transpose() const {
    RfMatrix r(ctx(), m_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < m_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RatFunc RfMatrix::det() const {
    if (n_ != m_) throw std::invalid_argument("RfMatrix::det: not square");
    if (n_ == 1) return at(0, 0);
    if (n_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    if (n_ == 3)
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    throw std::invalid_argument("RfMatrix::det: n > 3 unsupported");
}

RfMatrix RfMatrix::inverse() const {
    RatFunc d = det();
    if (d.is_zero()) throw std::domain_error("RfMatrix::inverse: singular");
    RatFunc di = d.inv();
    RfMatrix r(ctx(), n_, n_);
    if (n_ == 1) {
        r.at(0, 0) = di;
        return r;
    }
    if (n_ == 2) {
        r.at(0, 0) = at(1, 1) * di;
        r.at(1, 1) = at(0, 0) * di;
        r.at(0, 1) = -at(0, 1) * di;
        r.at(1, 0) = -at(1, 0) * di;
        return r;
    }
    // n == 3: adjugate
    auto c = [&](int i, int j) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        return at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(j, i) = c(i, j) * di;
    return r;
}

RfMatrix RfMatrix::derivative() const {
    RfMatrix r = *this;
    for (auto& v : r.a_) v = v.derivative();
    return r;
}

RfMatrix RfMatrix::subst_pow(uint32_t k) const {
    RfMatrix r = *this;
    for (auto& v : r.a_) v = v.subst_pow(k);
    return r;
}

RfMatrix RfMatrix::compose(const RatFunc& g) const {
    RfMatrix r = *this;
    for (auto& v : r.a_) v = v.compose(g);
    return r;
}

RfMatrix RfMatrix::coeff_frobenius(int64_t k) const {
    RfMatrix r = *this;
    for (auto& v : r.a_) v = v.coeff_frobenius(k);
    return r;
}

bool RfMatrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

std::vector<RatFunc> RfMatrix::apply(const std::vector<RatFunc>& v) const {
    std::vector<RatFunc> out(n_, RatFunc::zero(ctx()));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < m_; ++j)
            if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

}  // namespace parhiggs
