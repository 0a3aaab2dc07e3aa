#pragma once

#include "g2/rational.hpp"

#include <cstddef>
#include <vector>

namespace g2 {

/// Dense rows x cols rational matrix for exact elimination.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> a_;
};

std::size_t rank(RatMatrix m);

/// Basis of {x : m x = 0}, one vector per free column of the reduced echelon form.
std::vector<std::vector<Rational>> nullspace(RatMatrix m);

struct LeastSquares {
    std::vector<Rational> x;
    std::vector<Rational> residual;  // b - A x
    [[nodiscard]] bool exact() const;
};

/// Minimizes |A x - b| exactly through the normal equations. Columns of `a`
/// must be linearly independent; throws std::domain_error otherwise.
LeastSquares least_squares(const RatMatrix& a, const std::vector<Rational>& b);

}  // namespace g2
