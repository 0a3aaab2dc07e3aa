#include "support.hpp"

#include "g2/frame.hpp"
#include "g2/g2alg.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

using namespace g2;
using namespace g2test;

namespace {

int delta(int a, int b) { return a == b ? 1 : 0; }

// Expected triples, written out independently of the library tables (0-based).
std::map<std::array<int, 3>, int> standard_triples() {
    // phi = e123 + e145 + e167 + e246 - e257 - e347 - e356 on labels 1..7
    return {{{0, 1, 2}, 1}, {{0, 3, 4}, 1}, {{0, 5, 6}, 1}, {{1, 3, 5}, 1},
            {{1, 4, 6}, -1}, {{2, 3, 6}, -1}, {{2, 4, 5}, -1}};
}

int perm_sign(std::vector<int> v) {
    int s = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) s = -s;
    return s;
}

// *e^{I} = orientation * sign(I, I^c) e^{I^c}
KForm complement_star(const KForm& a, int orientation) {
    KForm out(kDim - a.degree());
    for (const auto& [mask, c] : a.terms()) {
        std::vector<int> order = mask_indices(mask);
        const auto rest = mask_indices(static_cast<IndexMask>(kFullMask & ~mask));
        order.insert(order.end(), rest.begin(), rest.end());
        out.add(static_cast<IndexMask>(kFullMask & ~mask), Rational(orientation * perm_sign(order)) * c);
    }
    return out;
}

Vec7 oct_cross(const Vec7& u, const Vec7& v) {
    Oct x{}, y{};
    for (int i = 0; i < kDim; ++i) {
        x[static_cast<std::size_t>(i + 1)] = u[i];
        y[static_cast<std::size_t>(i + 1)] = v[i];
    }
    const Oct p = oct_mul(x, y);
    Vec7 w;
    for (int i = 0; i < kDim; ++i) w[i] = p[static_cast<std::size_t>(i + 1)];
    return w;
}

}  // namespace

TEST_CASE("standard table matches the written-out phi") {
    const G2Frame& f = standard_frame();
    const auto expected = standard_triples();
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k) {
                int e = 0;
                std::array<int, 3> key{i, j, k};
                std::vector<int> v{i, j, k};
                std::sort(key.begin(), key.end());
                if (auto it = expected.find(key); it != expected.end() && i != j && j != k && i != k)
                    e = it->second * perm_sign(v);
                CHECK(f.eps(i, j, k) == e);
            }
    CHECK(f.table().nonzero_count() == 42);
    CHECK(f.label_offset() == 1);
}

TEST_CASE("cayley table follows e_i x e_{i+1} = e_{i+3}") {
    const G2Frame& f = cayley_frame();
    for (int i = 0; i < kDim; ++i) {
        CHECK(cross_basis(i, (i + 1) % 7, f) == Vec7::basis((i + 3) % 7));
        CHECK(cross_basis((i + 1) % 7, (i + 3) % 7, f) == Vec7::basis(i));
        CHECK(cross_basis((i + 3) % 7, i, f) == Vec7::basis((i + 1) % 7));
    }
    CHECK(f.table().nonzero_count() == 42);
    CHECK(f.label_offset() == 0);
}

TEST_CASE("epsilon contraction identities, all index tuples, test-side star") {
    for (const G2Frame* fp : frames()) {
        const G2Frame& f = *fp;
        const KForm star = complement_star(f.phi(), f.orientation());
        CHECK(star == f.star_phi());
        for (int k = 0; k < kDim; ++k)
            for (int l = 0; l < kDim; ++l) {
                int s = 0;
                for (int i = 0; i < kDim; ++i)
                    for (int j = 0; j < kDim; ++j) s += f.eps(i, j, k) * f.eps(i, j, l);
                CHECK(s == 6 * delta(k, l));
            }
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                for (int p = 0; p < kDim; ++p)
                    for (int q = 0; q < kDim; ++q) {
                        int s = 0;
                        for (int i = 0; i < kDim; ++i) s += f.eps(i, j, k) * f.eps(i, p, q);
                        const int e4 = star.evaluate({j, k, p, q}).sign();
                        CHECK(s == e4 + delta(j, p) * delta(k, q) - delta(j, q) * delta(k, p));
                    }
        CHECK(check_epsilon_identities(f).pass);
    }
}

TEST_CASE("orientation induced by phi") {
    // (x -| phi)^2 ^ phi = 6 |x|^2 vol for the phi-orientation
    for (const G2Frame* fp : frames()) {
        Gen g(21);
        for (int t = 0; t < 20; ++t) {
            const Vec7 x = g.nonzero_vec();
            const KForm ix = interior(x, fp->phi());
            const KForm top = wedge(wedge(ix, ix), fp->phi());
            CHECK(top == Rational(6 * fp->orientation()) * x.norm_sq() * KForm::volume());
        }
    }
    CHECK(standard_frame().orientation() == 1);
    CHECK(cayley_frame().orientation() == -1);
}

TEST_CASE("both tables are signed relabelings of octonion multiplication") {
    const auto oct = octonion_epsilon();
    auto eps_oct = [&](int i, int j, int k) { return oct[static_cast<std::size_t>((i * 7 + j) * 7 + k)]; };
    for (const G2Frame* fp : frames()) {
        const G2Frame& f = *fp;
        auto eps_f = [&](int i, int j, int k) { return f.eps(i, j, k); };
        const auto sp = find_signed_perm(eps_oct, eps_f);
        REQUIRE(sp.has_value());
        const Mat7 gm = signed_perm_matrix(*sp);
        Gen g(22);
        for (int t = 0; t < 200; ++t) {
            const Vec7 u = g.vec(), v = g.vec();
            CHECK(cross(gm.apply(u), gm.apply(v), f) == gm.apply(oct_cross(u, v)));
        }
    }
    // the two library tables are related the same way
    auto es = [](int i, int j, int k) { return standard_frame().eps(i, j, k); };
    auto ec = [](int i, int j, int k) { return cayley_frame().eps(i, j, k); };
    CHECK(find_signed_perm(es, ec).has_value());
}

TEST_CASE("signed permutation symmetries of the standard table") {
    // automorphisms of the table form a finite subgroup of G2; count them by brute force
    const G2Frame& f = standard_frame();
    std::array<int, 7> perm{0, 1, 2, 3, 4, 5, 6};
    long count = 0;
    do {
        for (int signs = 0; signs < 128; ++signs) {
            auto s = [&](int i) { return (signs >> i) & 1 ? -1 : 1; };
            bool ok = true;
            for (int i = 0; i < kDim && ok; ++i)
                for (int j = i + 1; j < kDim && ok; ++j) {
                    const int k = f.table().third(i, j);
                    const int pk = f.table().third(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
                    if (pk != perm[static_cast<std::size_t>(k)] ||
                        f.eps(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)], pk) * s(i) * s(j) * s(k) !=
                            f.eps(i, j, k))
                        ok = false;
                }
            if (!ok) continue;
            ++count;
            SignedPerm sp;
            for (int i = 0; i < kDim; ++i) {
                sp.perm[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(i)];
                sp.sign[static_cast<std::size_t>(i)] = s(i);
            }
            const Mat7 gm = signed_perm_matrix(sp);
            for (int a = 0; a < kDim; ++a)
                for (int b = 0; b < kDim; ++b)
                    CHECK(cross(gm.column(a), gm.column(b), f) == gm.apply(cross_basis(a, b, f)));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    // 168 Fano collineations times the 8 sign patterns compatible with each
    CHECK(count == 1344);
}

TEST_CASE("cross product axioms against a naive contraction") {
    for (const G2Frame* fp : frames()) {
        const G2Frame& f = *fp;
        Gen g(23);
        for (int t = 0; t < 1000; ++t) {
            const Vec7 u = g.vec(), v = g.vec(), w = g.vec();
            const Vec7 uv = cross(u, v, f);
            CHECK(uv == naive_cross(u, v, f));
            CHECK(dot(uv, u) == Rational(0));
            CHECK(dot(uv, v) == Rational(0));
            CHECK(uv.norm_sq() == u.norm_sq() * v.norm_sq() - dot(u, v) * dot(u, v));
            CHECK(cross(u, uv, f) == -u.norm_sq() * v + dot(u, v) * u);
            // phi(u, v, w) = <u x v, w>
            const KForm pw = interior(w, interior(v, interior(u, f.phi())));
            CHECK(pw.coeff(0) == dot(uv, w));
        }
        CHECK(validate_cross_axioms(f, 5, 100).pass);
    }
}

TEST_CASE("star phi pairing") {
    for (const G2Frame* fp : frames()) {
        const PairingReport r = star_phi_pairing_check(*fp);
        CHECK(r.cases == 840);
        // <e_i x e_j, e_k x e_l> = *phi_ijkl + d_ik d_jl - d_il d_jk; distinct indices kill the deltas
        int matches = 0;
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j)
                for (int k = 0; k < kDim; ++k)
                    for (int l = 0; l < kDim; ++l) {
                        std::set<int> s{i, j, k, l};
                        if (s.size() != 4) continue;
                        if (fp->star_phi().evaluate({i, j, k, l}) ==
                            dot(cross_basis(i, j, *fp), cross_basis(k, l, *fp)))
                            ++matches;
                    }
        CHECK(r.matches == matches);
        CHECK(r.pass == (matches == 840));
    }
}

TEST_CASE("rational G2 elements from special triples preserve the cross product") {
    Gen g(24);
    for (const G2Frame* fp : frames()) {
        for (int t = 0; t < 30; ++t) {
            const Mat7 h = random_g2_element(g, *fp);
            CHECK(h.transpose() * h == Mat7::identity());
            const Vec7 u = g.vec(), v = g.vec();
            CHECK(cross(h.apply(u), h.apply(v), *fp) == h.apply(cross(u, v, *fp)));
        }
    }
}

TEST_CASE("cayley transform of a skew matrix is orthogonal") {
    Gen g(25);
    for (int t = 0; t < 30; ++t) {
        const Mat7 q = cayley_transform(g.skew());
        CHECK(q.transpose() * q == Mat7::identity());
        CHECK(det(q) == Rational(1));
    }
}

TEST_CASE("malformed tables are rejected") {
    std::vector<SignedTriple> t{{0, 1, 2, 1}, {0, 3, 4, 1}, {0, 5, 6, 1}, {1, 3, 5, 1},
                                {1, 4, 6, -1}, {2, 3, 6, -1}, {2, 4, 5, -1}};
    CHECK_NOTHROW(CrossTable(t, 0));
    auto bad = t;
    bad.pop_back();
    CHECK_THROWS_AS(CrossTable(bad, 0), std::invalid_argument);
    bad = t;
    bad[6] = {2, 4, 4, 1};
    CHECK_THROWS_AS(CrossTable(bad, 0), std::invalid_argument);
    bad = t;
    bad[6] = {0, 1, 3, 1};
    CHECK_THROWS_AS(CrossTable(bad, 0), std::invalid_argument);
    bad = t;
    bad[6] = {2, 4, 7, 1};
    CHECK_THROWS_AS(CrossTable(bad, 0), std::invalid_argument);
    bad = t;
    bad[6].sign = 2;
    CHECK_THROWS_AS(CrossTable(bad, 0), std::invalid_argument);
}

TEST_CASE("frame names") {
    CHECK(parse_frame_kind("standard") == FrameKind::Standard);
    CHECK(parse_frame_kind("cayley") == FrameKind::Cayley);
    CHECK_THROWS_AS(parse_frame_kind("octonion"), std::invalid_argument);
    CHECK(&frame_for(FrameKind::Cayley) == &cayley_frame());
}
