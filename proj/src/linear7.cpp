#include "g2/linear7.hpp"

namespace g2 {

Vec7 Vec7::basis(int i) {
    Vec7 v;
    v[i] = Rational(1);
    return v;
}

bool Vec7::is_zero() const {
    for (const auto& x : c_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Rational Vec7::norm_sq() const { return dot(*this, *this); }

std::string Vec7::to_string() const {
    std::string out = "(";
    for (int i = 0; i < kDim; ++i) {
        if (i != 0) out += ", ";
        out += (*this)[i].to_string();
    }
    return out + ")";
}

std::string Mat7::to_string() const {
    std::string out = "[";
    for (int i = 0; i < kDim; ++i) {
        if (i != 0) out += ", ";
        out += row(i).to_string();
    }
    return out + "]";
}

Vec7& Vec7::operator+=(const Vec7& rhs) {
    for (int i = 0; i < kDim; ++i) (*this)[i] += rhs[i];
    return *this;
}

Vec7& Vec7::operator-=(const Vec7& rhs) {
    for (int i = 0; i < kDim; ++i) (*this)[i] -= rhs[i];
    return *this;
}

Vec7& Vec7::operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

Rational dot(const Vec7& u, const Vec7& v) {
    Rational s;
    for (int i = 0; i < kDim; ++i) {
        if (!u[i].is_zero() && !v[i].is_zero()) s += u[i] * v[i];
    }
    return s;
}

Mat7 Mat7::identity() { return scalar(Rational(1)); }

Mat7 Mat7::scalar(const Rational& s) {
    Mat7 m;
    for (int i = 0; i < kDim; ++i) m(i, i) = s;
    return m;
}

Mat7 Mat7::diagonal(const std::array<Rational, kDim>& d) {
    Mat7 m;
    for (int i = 0; i < kDim; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

Mat7 Mat7::from_columns(const std::array<Vec7, kDim>& cols) {
    Mat7 m;
    for (int j = 0; j < kDim; ++j) {
        for (int i = 0; i < kDim; ++i) m(i, j) = cols[static_cast<std::size_t>(j)][i];
    }
    return m;
}

Mat7 Mat7::unit(int i, int j) {
    Mat7 m;
    m(i, j) = Rational(1);
    return m;
}

Vec7 Mat7::column(int j) const {
    Vec7 v;
    for (int i = 0; i < kDim; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec7 Mat7::row(int i) const {
    Vec7 v;
    for (int j = 0; j < kDim; ++j) v[j] = (*this)(i, j);
    return v;
}

Vec7 Mat7::apply(const Vec7& v) const {
    Vec7 out;
    for (int j = 0; j < kDim; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < kDim; ++i) {
            if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
        }
    }
    return out;
}

Mat7 Mat7::transpose() const {
    Mat7 t;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

Rational Mat7::trace() const {
    Rational s;
    for (int i = 0; i < kDim; ++i) s += (*this)(i, i);
    return s;
}

Mat7 Mat7::sym_part() const { return Rational(1, 2) * (*this + transpose()); }

Mat7 Mat7::skew_part() const { return Rational(1, 2) * (*this - transpose()); }

bool Mat7::is_zero() const {
    for (const auto& x : e_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

bool Mat7::is_symmetric() const {
    for (int i = 0; i < kDim; ++i) {
        for (int j = i + 1; j < kDim; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) return false;
        }
    }
    return true;
}

bool Mat7::is_skew() const {
    for (int i = 0; i < kDim; ++i) {
        for (int j = i; j < kDim; ++j) {
            if ((*this)(i, j) != -(*this)(j, i)) return false;
        }
    }
    return true;
}

Rational Mat7::norm_sq() const { return trace_inner(*this, *this); }

Mat7& Mat7::operator+=(const Mat7& rhs) {
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += rhs.e_[k];
    return *this;
}

Mat7& Mat7::operator-=(const Mat7& rhs) {
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= rhs.e_[k];
    return *this;
}

Mat7& Mat7::operator*=(const Rational& s) {
    for (auto& x : e_) x *= s;
    return *this;
}

Mat7 operator*(const Mat7& a, const Mat7& b) {
    Mat7 c;
    for (int i = 0; i < kDim; ++i) {
        for (int k = 0; k < kDim; ++k) {
            if (a(i, k).is_zero()) continue;
            for (int j = 0; j < kDim; ++j) {
                if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return c;
}

Rational trace_inner(const Mat7& a, const Mat7& b) {
    Rational s;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            if (!a(i, j).is_zero() && !b(i, j).is_zero()) s += a(i, j) * b(i, j);
        }
    }
    return s;
}

Mat7 commutator(const Mat7& a, const Mat7& b) { return a * b - b * a; }

}  // namespace g2
