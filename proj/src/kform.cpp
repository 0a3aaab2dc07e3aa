#include "g2/kform.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace g2 {

std::string_view to_string(NormConvention c) {
    return c == NormConvention::Form ? "form" : "tensor";
}

NormConvention parse_norm_convention(std::string_view text) {
    if (text == "form") return NormConvention::Form;
    if (text == "tensor") return NormConvention::Tensor;
    throw std::invalid_argument("unknown norm convention '" + std::string(text) + "'");
}

std::vector<int> mask_indices(IndexMask mask) {
    std::vector<int> out;
    for (int i = 0; i < kDim; ++i) {
        if ((mask >> i) & 1U) out.push_back(i);
    }
    return out;
}

int mask_degree(IndexMask mask) { return std::popcount(static_cast<unsigned>(mask)); }

std::vector<IndexMask> masks_of_degree(int k) {
    std::vector<IndexMask> out;
    for (unsigned m = 0; m <= kFullMask; ++m) {
        if (std::popcount(m) == k) out.push_back(static_cast<IndexMask>(m));
    }
    return out;
}

int shuffle_sign(IndexMask i, IndexMask j) {
    if ((i & j) != 0) return 0;
    // Count pairs (a in I, b in J) with a > b.
    int inversions = 0;
    for (int b = 0; b < kDim; ++b) {
        if (((j >> b) & 1U) == 0) continue;
        inversions += std::popcount(static_cast<unsigned>(i >> (b + 1)));
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

namespace {

// Sign of the permutation sorting `indices`; 0 on repeats. Fills `mask`.
int sort_sign(std::span<const int> indices, IndexMask& mask) {
    mask = 0;
    int inversions = 0;
    for (std::size_t a = 0; a < indices.size(); ++a) {
        const int ia = indices[a];
        if (ia < 0 || ia >= kDim) throw std::out_of_range("form index outside 0..6");
        if ((mask >> ia) & 1U) return 0;
        mask = static_cast<IndexMask>(mask | (1U << ia));
        for (std::size_t b = a + 1; b < indices.size(); ++b) {
            if (ia > indices[b]) ++inversions;
        }
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

Rational factorial(int k) {
    Rational f(1);
    for (int i = 2; i <= k; ++i) f *= Rational(i);
    return f;
}

}  // namespace

KForm::KForm(int degree) : degree_(degree) {
    if (degree < 0 || degree > kDim) {
        throw std::domain_error("form degree " + std::to_string(degree) + " outside 0..7");
    }
}

KForm KForm::scalar(const Rational& value) {
    KForm f(0);
    f.add(0, value);
    return f;
}

KForm KForm::one_form(const Vec7& v) {
    KForm f(1);
    for (int i = 0; i < kDim; ++i) f.add(static_cast<IndexMask>(1U << i), v[i]);
    return f;
}

KForm KForm::volume() {
    KForm f(kDim);
    f.add(kFullMask, Rational(1));
    return f;
}

KForm KForm::monomial(std::span<const int> indices, const Rational& coeff) {
    if (indices.size() > static_cast<std::size_t>(kDim)) {
        throw std::domain_error("monomial of degree above 7");
    }
    KForm f(static_cast<int>(indices.size()));
    IndexMask mask = 0;
    const int s = sort_sign(indices, mask);
    if (s != 0) f.add(mask, Rational(s) * coeff);
    return f;
}

KForm KForm::monomial(std::initializer_list<int> indices, const Rational& coeff) {
    return monomial(std::span<const int>(indices.begin(), indices.size()), coeff);
}

Rational KForm::coeff(IndexMask mask) const {
    const auto it = terms_.find(mask);
    return it == terms_.end() ? Rational() : it->second;
}

Rational KForm::evaluate(std::span<const int> indices) const {
    if (static_cast<int>(indices.size()) != degree_) {
        throw std::invalid_argument("form evaluated on wrong number of arguments");
    }
    IndexMask mask = 0;
    const int s = sort_sign(indices, mask);
    if (s == 0) return {};
    const Rational c = coeff(mask);
    return s > 0 ? c : -c;
}

Rational KForm::evaluate(std::initializer_list<int> indices) const {
    return evaluate(std::span<const int>(indices.begin(), indices.size()));
}

void KForm::add(IndexMask mask, const Rational& value) {
    if (mask_degree(mask) != degree_) throw std::invalid_argument("monomial degree mismatch");
    if (value.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mask, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Vec7 KForm::to_vec() const {
    if (degree_ != 1) throw std::domain_error("to_vec requires a 1-form");
    Vec7 v;
    for (const auto& [mask, c] : terms_) v[std::countr_zero(static_cast<unsigned>(mask))] = c;
    return v;
}

KForm& KForm::operator+=(const KForm& rhs) {
    if (rhs.degree_ != degree_) throw std::invalid_argument("adding forms of different degree");
    for (const auto& [mask, c] : rhs.terms_) add(mask, c);
    return *this;
}

KForm& KForm::operator-=(const KForm& rhs) {
    if (rhs.degree_ != degree_) throw std::invalid_argument("subtracting forms of different degree");
    for (const auto& [mask, c] : rhs.terms_) add(mask, -c);
    return *this;
}

KForm& KForm::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mask, c] : terms_) c *= s;
    return *this;
}

std::string KForm::to_string(int label_offset) const {
    if (terms_.empty()) return "0";
    // lexicographic in the index tuples, e.g. e^{123} before e^{145}
    std::vector<std::pair<std::vector<int>, Rational>> sorted;
    for (const auto& [mask, c] : terms_) sorted.emplace_back(mask_indices(mask), c);
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string out;
    bool first = true;
    for (const auto& [indices, c] : sorted) {
        const bool negative = c.sign() < 0;
        const Rational mag = c.abs();
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (!unit || degree_ == 0) out += mag.to_string();
        if (degree_ == 0) continue;
        if (!unit) out += " ";
        out += "e^{";
        for (int i : indices) out += std::to_string(i + label_offset);
        out += "}";
    }
    return out;
}

KForm wedge(const KForm& a, const KForm& b) {
    const int degree = a.degree() + b.degree();
    if (degree > kDim) throw std::domain_error("wedge product of degree above 7");
    KForm out(degree);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            const int s = shuffle_sign(ma, mb);
            if (s == 0) continue;
            const Rational v = ca * cb;
            out.add(static_cast<IndexMask>(ma | mb), s > 0 ? v : -v);
        }
    }
    return out;
}

KForm interior(const Vec7& x, const KForm& a) {
    if (a.degree() == 0) throw std::domain_error("interior product of a 0-form");
    KForm out(a.degree() - 1);
    for (const auto& [mask, c] : a.terms()) {
        int position = 0;
        for (int i : mask_indices(mask)) {
            if (!x[i].is_zero()) {
                const Rational v = x[i] * c;
                out.add(static_cast<IndexMask>(mask & ~(1U << i)), position % 2 == 0 ? v : -v);
            }
            ++position;
        }
    }
    return out;
}

KForm hodge(const KForm& a, int orientation) {
    KForm out(kDim - a.degree());
    for (const auto& [mask, c] : a.terms()) {
        const auto complement = static_cast<IndexMask>(kFullMask & ~mask);
        const int s = shuffle_sign(mask, complement) * (orientation < 0 ? -1 : 1);
        out.add(complement, s > 0 ? c : -c);
    }
    return out;
}

Rational inner(const KForm& a, const KForm& b, NormConvention convention) {
    if (a.degree() != b.degree()) throw std::invalid_argument("inner product of forms of different degree");
    Rational s;
    for (const auto& [mask, c] : a.terms()) {
        const auto it = b.terms().find(mask);
        if (it != b.terms().end()) s += c * it->second;
    }
    if (convention == NormConvention::Tensor) s *= factorial(a.degree());
    return s;
}

Rational norm_sq(const KForm& a, NormConvention convention) { return inner(a, a, convention); }

}  // namespace g2
