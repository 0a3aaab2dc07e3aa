#include "g2/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace g2 {

namespace {

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        }
        const Rational inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(RatMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rational>> nullspace(RatMatrix m) {
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols());
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool LeastSquares::exact() const {
    for (const auto& r : residual) {
        if (!r.is_zero()) return false;
    }
    return true;
}

LeastSquares least_squares(const RatMatrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("least_squares: size mismatch");
    const std::size_t n = a.cols();
    // Augmented normal equations [A^T A | A^T b].
    RatMatrix normal(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Rational s;
            for (std::size_t r = 0; r < a.rows(); ++r) {
                if (!a(r, i).is_zero() && !a(r, j).is_zero()) s += a(r, i) * a(r, j);
            }
            normal(i, j) = s;
            normal(j, i) = s;
        }
        Rational s;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (!a(r, i).is_zero() && !b[r].is_zero()) s += a(r, i) * b[r];
        }
        normal(i, n) = s;
    }
    const auto pivots = rref(normal);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) {
        throw std::domain_error("least_squares: columns are linearly dependent");
    }
    LeastSquares out;
    out.x.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.x[i] = normal(i, n);
    out.residual = b;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!a(r, j).is_zero() && !out.x[j].is_zero()) out.residual[r] -= a(r, j) * out.x[j];
        }
    }
    return out;
}

}  // namespace g2
