#pragma once

#include "g2/linear7.hpp"
#include "g2/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace g2 {

/// Normalization of the inner product on k-forms.
///   Form:   increasing monomials e^{i1<...<ik} are orthonormal.
///   Tensor: sum over all ordered index tuples, i.e. k! times Form.
enum class NormConvention { Form, Tensor };

std::string_view to_string(NormConvention c);
/// Accepts "form" or "tensor"; throws std::invalid_argument otherwise.
NormConvention parse_norm_convention(std::string_view text);

/// Subsets of {0..6} encoded as bit masks; bit i set <=> index i present.
using IndexMask = std::uint8_t;

inline constexpr IndexMask kFullMask = 0x7F;

std::vector<int> mask_indices(IndexMask mask);
int mask_degree(IndexMask mask);
/// All masks of degree k in increasing numeric order; the coordinate order used for k-forms.
std::vector<IndexMask> masks_of_degree(int k);

/// Constant-coefficient exterior k-form on R^7. Only strictly increasing
/// index tuples are stored, keyed by their mask; zero coefficients are dropped.
class KForm {
public:
    /// Throws std::domain_error unless 0 <= degree <= 7.
    explicit KForm(int degree = 0);

    static KForm scalar(const Rational& value);
    static KForm one_form(const Vec7& v);
    /// The volume form e^{0...6}.
    static KForm volume();
    /// coeff * e^{i1} ^ ... ^ e^{ik} for indices in any order; repeated indices give 0.
    static KForm monomial(std::span<const int> indices, const Rational& coeff = Rational(1));
    static KForm monomial(std::initializer_list<int> indices, const Rational& coeff = Rational(1));

    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<IndexMask, Rational>& terms() const { return terms_; }

    [[nodiscard]] Rational coeff(IndexMask mask) const;
    /// Value on (e_{i1},...,e_{ik}) for an arbitrary index tuple: sign of the
    /// sorting permutation times the stored coefficient, 0 on repeats.
    [[nodiscard]] Rational evaluate(std::span<const int> indices) const;
    [[nodiscard]] Rational evaluate(std::initializer_list<int> indices) const;

    /// Adds `value` to the coefficient of the increasing monomial `mask`.
    void add(IndexMask mask, const Rational& value);

    /// Coefficients of a 1-form as a vector. Throws std::domain_error otherwise.
    [[nodiscard]] Vec7 to_vec() const;

    KForm& operator+=(const KForm& rhs);
    KForm& operator-=(const KForm& rhs);
    KForm& operator*=(const Rational& s);

    friend KForm operator+(KForm a, const KForm& b) { return a += b; }
    friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
    friend KForm operator-(KForm a) { return a *= Rational(-1); }
    friend KForm operator*(const Rational& s, KForm a) { return a *= s; }
    friend KForm operator*(KForm a, const Rational& s) { return a *= s; }
    friend bool operator==(const KForm&, const KForm&) = default;

    /// Human-readable sum such as "e^{012} - 1/2 e^{346}" using `label_offset`.
    [[nodiscard]] std::string to_string(int label_offset = 0) const;

private:
    int degree_;
    std::map<IndexMask, Rational> terms_;
};

/// Sign (+1/-1) of the shuffle taking I followed by J into increasing order;
/// 0 when I and J intersect.
int shuffle_sign(IndexMask i, IndexMask j);

/// Throws std::domain_error when deg a + deg b > 7.
KForm wedge(const KForm& a, const KForm& b);
/// X contracted into the first slot. Throws std::domain_error on a 0-form.
KForm interior(const Vec7& x, const KForm& a);
/// Hodge star for the orthonormal frame with orientation `orientation` * e^{0...6}.
KForm hodge(const KForm& a, int orientation = 1);

Rational inner(const KForm& a, const KForm& b, NormConvention convention = NormConvention::Form);
Rational norm_sq(const KForm& a, NormConvention convention = NormConvention::Form);

}  // namespace g2
