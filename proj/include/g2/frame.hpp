#pragma once

#include "g2/kform.hpp"
#include "g2/linear7.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace g2 {

/// One unordered index triple of the cross-product table with the sign of
/// its increasing ordering, e.g. {0,1,2,+1} for e^{012}.
struct SignedTriple {
    int i, j, k;
    int sign;
};

/// Fully antisymmetric epsilon table eps(i,j,k) with entries in {-1,0,+1}.
class CrossTable {
public:
    /// Builds the table from seven signed triples. Throws std::invalid_argument
    /// if an index is out of range, repeated, or a triple is listed twice.
    CrossTable(const std::vector<SignedTriple>& triples, int label_offset);

    [[nodiscard]] int eps(int i, int j, int k) const {
        return eps_[static_cast<std::size_t>((i * kDim + j) * kDim + k)];
    }
    [[nodiscard]] int label_offset() const { return label_offset_; }
    /// The triples with increasing indices, in lexicographic order.
    [[nodiscard]] std::vector<SignedTriple> triples() const;
    [[nodiscard]] int nonzero_count() const;

    /// k with eps(i,j,k) != 0, or -1 when none.
    [[nodiscard]] int third(int i, int j) const {
        return third_[static_cast<std::size_t>(i * kDim + j)];
    }

private:
    std::array<std::int8_t, kDim * kDim * kDim> eps_{};
    std::array<std::int8_t, kDim * kDim> third_{};
    int label_offset_;
};

/// A G2 frame: epsilon table, the 3-form phi, its Hodge dual and the
/// orientation phi induces on R^7 (+1 when it agrees with e^{0...6}).
class G2Frame {
public:
    G2Frame(std::string name, CrossTable table);

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] const CrossTable& table() const { return table_; }
    [[nodiscard]] const KForm& phi() const { return phi_; }
    [[nodiscard]] const KForm& star_phi() const { return star_phi_; }
    [[nodiscard]] int orientation() const { return orientation_; }
    [[nodiscard]] int label_offset() const { return table_.label_offset(); }

    [[nodiscard]] int eps(int i, int j, int k) const { return table_.eps(i, j, k); }
    /// Four-index symbol read off star_phi.
    [[nodiscard]] int eps4(int i, int j, int k, int l) const;
    /// Hodge star with respect to this frame's orientation.
    [[nodiscard]] KForm hodge(const KForm& a) const { return g2::hodge(a, orientation_); }

private:
    std::string name_;
    CrossTable table_;
    KForm phi_;
    KForm star_phi_;
    int orientation_;
};

/// phi = e^{123}+e^{145}+e^{167}+e^{246}-e^{257}-e^{347}-e^{356}, labels 1..7.
const G2Frame& standard_frame();
/// Cayley frame on labels 0..6: e_i x e_{i+1} = e_{i+3} (indices mod 7).
const G2Frame& cayley_frame();

G2Frame build_standard_frame();
G2Frame build_cayley_frame();

enum class FrameKind { Standard, Cayley };
std::string_view to_string(FrameKind kind);
FrameKind parse_frame_kind(std::string_view text);
const G2Frame& frame_for(FrameKind kind);

/// Sign of (x _| phi) ^ (x _| phi) ^ phi against e^{0...6} for x = e_0.
int induced_orientation(const KForm& phi);

/// u x v = sum eps(i,j,k) u_i v_j e_k.
Vec7 cross(const Vec7& u, const Vec7& v, const G2Frame& frame);
/// e_i x e_j.
Vec7 cross_basis(int i, int j, const G2Frame& frame);

/// Outcome of an exhaustive or sampled identity check.
struct CheckReport {
    bool pass = true;
    long cases = 0;
    std::string failed_rule;  // empty on pass
    std::string witness;      // first counterexample, empty on pass
    std::vector<std::string> violated_rules;
};

/// Both contraction identities of the epsilon symbols, checked over all
/// index combinations: sum_ij eps_ijk eps_ijl = 6 delta_kl and
/// sum_i eps_ijk eps_ipq = eps_jkpq + delta_jp delta_kq - delta_jq delta_kp.
CheckReport check_epsilon_identities(const G2Frame& frame);

/// The three cross-product rules, exhaustively on basis triples and on
/// `trials` seeded rational triples.
CheckReport validate_cross_axioms(const G2Frame& frame, std::uint64_t seed = 1, int trials = 1000);

/// Pairing check star_phi(e_i,e_j,e_k,e_l) = <e_i x e_j, e_k x e_l> over all
/// 840 ordered quadruples of distinct indices.
struct PairingReport {
    bool pass = false;
    int cases = 0;
    int matches = 0;
    int sign_flipped = 0;
    /// True when every case matches after a single global sign change.
    bool global_sign_flip = false;
};
PairingReport star_phi_pairing_check(const G2Frame& frame);

}  // namespace g2
