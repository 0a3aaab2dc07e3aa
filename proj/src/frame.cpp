#include "g2/frame.hpp"

#include "g2/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2 {

namespace {

int delta(int a, int b) { return a == b ? 1 : 0; }

std::string label(int i, int offset) { return std::to_string(i + offset); }

}  // namespace

CrossTable::CrossTable(const std::vector<SignedTriple>& triples, int label_offset)
    : label_offset_(label_offset) {
    if (triples.size() != 7) throw std::invalid_argument("a cross-product table has exactly 7 triples");
    third_.fill(-1);
    for (const auto& t : triples) {
        const std::array<int, 3> idx{t.i, t.j, t.k};
        for (int v : idx) {
            if (v < 0 || v >= kDim) throw std::invalid_argument("triple index outside 0..6");
        }
        if (t.i == t.j || t.j == t.k || t.i == t.k) throw std::invalid_argument("triple with repeated index");
        if (t.sign != 1 && t.sign != -1) throw std::invalid_argument("triple sign must be +1 or -1");
        // All six orderings; odd permutations flip the sign.
        const std::array<std::array<int, 4>, 6> perms{{{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1},
                                                       {1, 0, 2, -1}, {0, 2, 1, -1}, {2, 1, 0, -1}}};
        for (const auto& p : perms) {
            const int a = idx[static_cast<std::size_t>(p[0])];
            const int b = idx[static_cast<std::size_t>(p[1])];
            const int c = idx[static_cast<std::size_t>(p[2])];
            auto& slot = eps_[static_cast<std::size_t>((a * kDim + b) * kDim + c)];
            if (third_[static_cast<std::size_t>(a * kDim + b)] != -1) {
                throw std::invalid_argument("index pair shared by two triples");
            }
            slot = static_cast<std::int8_t>(t.sign * p[3]);
            third_[static_cast<std::size_t>(a * kDim + b)] = static_cast<std::int8_t>(c);
        }
    }
}

std::vector<SignedTriple> CrossTable::triples() const {
    std::vector<SignedTriple> out;
    for (int i = 0; i < kDim; ++i) {
        for (int j = i + 1; j < kDim; ++j) {
            for (int k = j + 1; k < kDim; ++k) {
                if (const int e = eps(i, j, k); e != 0) out.push_back({i, j, k, e});
            }
        }
    }
    return out;
}

int CrossTable::nonzero_count() const {
    return static_cast<int>(std::count_if(eps_.begin(), eps_.end(), [](std::int8_t e) { return e != 0; }));
}

int induced_orientation(const KForm& phi) {
    const KForm x = interior(Vec7::basis(0), phi);
    const KForm top = wedge(wedge(x, x), phi);
    const int s = top.coeff(kFullMask).sign();
    return s < 0 ? -1 : 1;
}

G2Frame::G2Frame(std::string name, CrossTable table)
    : name_(std::move(name)), table_(std::move(table)), phi_(3), star_phi_(4), orientation_(1) {
    for (const auto& t : table_.triples()) phi_ += KForm::monomial({t.i, t.j, t.k}, Rational(t.sign));
    orientation_ = induced_orientation(phi_);
    star_phi_ = g2::hodge(phi_, orientation_);
}

int G2Frame::eps4(int i, int j, int k, int l) const {
    return star_phi_.evaluate({i, j, k, l}).sign();
}

G2Frame build_standard_frame() {
    // Labels 1..7 shifted to internal 0..6.
    std::vector<SignedTriple> t{{0, 1, 2, 1}, {0, 3, 4, 1}, {0, 5, 6, 1}, {1, 3, 5, 1},
                                {1, 4, 6, -1}, {2, 3, 6, -1}, {2, 4, 5, -1}};
    return {"standard", CrossTable(t, 1)};
}

G2Frame build_cayley_frame() {
    std::vector<SignedTriple> t;
    for (int i = 0; i < kDim; ++i) t.push_back({i, (i + 1) % kDim, (i + 3) % kDim, 1});
    return {"cayley", CrossTable(t, 0)};
}

const G2Frame& standard_frame() {
    static const G2Frame frame = build_standard_frame();
    return frame;
}

const G2Frame& cayley_frame() {
    static const G2Frame frame = build_cayley_frame();
    return frame;
}

std::string_view to_string(FrameKind kind) {
    return kind == FrameKind::Standard ? "standard" : "cayley";
}

FrameKind parse_frame_kind(std::string_view text) {
    if (text == "standard") return FrameKind::Standard;
    if (text == "cayley") return FrameKind::Cayley;
    throw std::invalid_argument("unknown frame '" + std::string(text) + "'");
}

const G2Frame& frame_for(FrameKind kind) {
    return kind == FrameKind::Standard ? standard_frame() : cayley_frame();
}

Vec7 cross(const Vec7& u, const Vec7& v, const G2Frame& frame) {
    Vec7 out;
    const CrossTable& t = frame.table();
    for (int i = 0; i < kDim; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < kDim; ++j) {
            if (i == j || v[j].is_zero()) continue;
            const int k = t.third(i, j);
            if (k < 0) continue;
            const Rational p = u[i] * v[j];
            if (t.eps(i, j, k) > 0) {
                out[k] += p;
            } else {
                out[k] -= p;
            }
        }
    }
    return out;
}

Vec7 cross_basis(int i, int j, const G2Frame& frame) {
    Vec7 out;
    if (i == j) return out;
    const int k = frame.table().third(i, j);
    if (k >= 0) out[k] = Rational(frame.eps(i, j, k));
    return out;
}

CheckReport check_epsilon_identities(const G2Frame& frame) {
    CheckReport r;
    const int off = frame.label_offset();
    auto fail = [&](const std::string& rule, const std::string& witness) {
        if (r.pass) {
            r.pass = false;
            r.failed_rule = rule;
            r.witness = witness;
        }
    };
    for (int k = 0; k < kDim; ++k) {
        for (int l = 0; l < kDim; ++l) {
            int s = 0;
            for (int i = 0; i < kDim; ++i) {
                for (int j = 0; j < kDim; ++j) s += frame.eps(i, j, k) * frame.eps(i, j, l);
            }
            ++r.cases;
            if (s != 6 * delta(k, l)) {
                fail("sum_ij eps_ijk eps_ijl = 6 delta_kl",
                     "k=" + label(k, off) + " l=" + label(l, off) + " sum=" + std::to_string(s));
            }
        }
    }
    for (int j = 0; j < kDim; ++j) {
        for (int k = 0; k < kDim; ++k) {
            for (int p = 0; p < kDim; ++p) {
                for (int q = 0; q < kDim; ++q) {
                    int lhs = 0;
                    for (int i = 0; i < kDim; ++i) lhs += frame.eps(i, j, k) * frame.eps(i, p, q);
                    const int rhs = frame.eps4(j, k, p, q) + delta(j, p) * delta(k, q) - delta(j, q) * delta(k, p);
                    ++r.cases;
                    if (lhs != rhs) {
                        fail("sum_i eps_ijk eps_ipq = eps_jkpq + d_jp d_kq - d_jq d_kp",
                             "(j,k,p,q)=(" + label(j, off) + "," + label(k, off) + "," + label(p, off) + "," +
                                 label(q, off) + ") lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs));
                    }
                }
            }
        }
    }
    return r;
}

namespace {

constexpr std::array<const char*, 3> kCrossRules{
    "<u x v, w> = <u, v x w>",
    "u x (u x w) = <u,w> u - |u|^2 w",
    "u x (v x w) = -v x (u x w) + <u,w> v + <v,w> u - 2 <u,v> w",
};

// Bit r set <=> rule r violated by the triple.
unsigned violated_rules(const Vec7& u, const Vec7& v, const Vec7& w, const G2Frame& f) {
    unsigned bits = 0;
    if (dot(cross(u, v, f), w) != dot(u, cross(v, w, f))) bits |= 1U;
    if (cross(u, cross(u, w, f), f) != dot(u, w) * u - u.norm_sq() * w) bits |= 2U;
    const Vec7 lhs = cross(u, cross(v, w, f), f);
    const Vec7 rhs = -cross(v, cross(u, w, f), f) + dot(u, w) * v + dot(v, w) * u - Rational(2) * dot(u, v) * w;
    if (lhs != rhs) bits |= 4U;
    return bits;
}

}  // namespace

CheckReport validate_cross_axioms(const G2Frame& frame, std::uint64_t seed, int trials) {
    CheckReport r;
    unsigned seen = 0;
    auto record = [&](const Vec7& u, const Vec7& v, const Vec7& w) {
        ++r.cases;
        const unsigned bits = violated_rules(u, v, w, frame);
        if (bits == 0) return;
        for (unsigned k = 0; k < kCrossRules.size(); ++k) {
            if (((bits >> k) & 1U) == 0 || ((seen >> k) & 1U) != 0) continue;
            seen |= 1U << k;
            r.violated_rules.emplace_back(kCrossRules[k]);
            if (r.pass) {
                r.pass = false;
                r.failed_rule = kCrossRules[k];
                r.witness = "u=" + u.to_string() + " v=" + v.to_string() + " w=" + w.to_string();
            }
        }
    };
    for (int a = 0; a < kDim; ++a) {
        for (int b = 0; b < kDim; ++b) {
            for (int c = 0; c < kDim; ++c) record(Vec7::basis(a), Vec7::basis(b), Vec7::basis(c));
        }
    }
    Sampler sampler(derive_seed(seed, "cross_axioms"));
    for (int t = 0; t < trials; ++t) {
        const Vec7 u = sampler.vec();
        const Vec7 v = sampler.vec();
        const Vec7 w = sampler.vec();
        record(u, v, w);
    }
    return r;
}

PairingReport star_phi_pairing_check(const G2Frame& frame) {
    PairingReport r;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            for (int k = 0; k < kDim; ++k) {
                for (int l = 0; l < kDim; ++l) {
                    if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
                    ++r.cases;
                    const Rational lhs = frame.star_phi().evaluate({i, j, k, l});
                    const Rational rhs = dot(cross_basis(i, j, frame), cross_basis(k, l, frame));
                    if (lhs == rhs) ++r.matches;
                    if (lhs == -rhs) ++r.sign_flipped;
                }
            }
        }
    }
    r.pass = r.matches == r.cases;
    r.global_sign_flip = !r.pass && r.sign_flipped == r.cases;
    return r;
}

}  // namespace g2
