#include <doctest.h>

#include <algorithm>

#include "lg3/fano.hpp"

using namespace lg3;

namespace {

SymMat3 conic_seed() {
    SymMat3 Y0;
    Y0.at(0, 1) = 1;
    Y0.at(2, 2) = 1;
    return Y0;
}

Point13 slot_point(int k) {
    Point13 p;
    p[k] = 1;
    return p;
}

/// c0 = (1:0:0:0), c1 = (0:0:0:1), c2 = (0:0:Y0:0): the worked section whose
/// dual quartic is s^2 t^2 - 4 s w^3.
std::array<Point13, 3> worked_covectors() {
    Point13 c2;
    c2.setY(conic_seed());
    return {slot_point(SU), slot_point(SZ), c2};
}

TernaryForm worked_quartic() {
    TernaryForm f(4);
    f.at(2, 2) = 1;
    f.at(1, 0) = -4;
    return f;
}

TernaryForm fermat_quartic() {
    TernaryForm f(4);
    f.at(4, 0) = 1;
    f.at(0, 4) = 1;
    f.at(0, 0) = 1;
    return f;
}

TernaryForm klein_quartic() {
    TernaryForm f(4);
    f.at(3, 1) = 1;  // s^3 t
    f.at(0, 3) = 1;  // t^3 w
    f.at(1, 0) = 1;  // w^3 s
    return f;
}

TernaryForm cube(unsigned var) {
    TernaryForm f(3);
    unsigned e[3] = {0, 0, 0};
    e[var] = 3;
    f.at(e[0], e[1]) = 1;
    return f;
}

DualQuartic quartic_of(const TernaryForm& f) {
    DualQuartic q;
    q.form = f;
    q.degenerate = false;
    return q;
}

}  // namespace

TEST_CASE("macaulay resultant of three cubics at pinned values") {
    CHECK(resultant_cubics(cube(0), cube(1), cube(2)) == 1);

    TernaryForm f = fermat_quartic();
    CHECK(resultant_cubics(f.diff(0), f.diff(1), f.diff(2)) ==
          parse_rat("18014398509481984"));  // 4^27

    TernaryForm k = klein_quartic();
    CHECK(resultant_cubics(k.diff(0), k.diff(1), k.diff(2)) ==
          parse_rat("13492928512"));  // 2^14 * 7^7

    TernaryForm w = worked_quartic();
    CHECK(resultant_cubics(w.diff(0), w.diff(1), w.diff(2)) == 0);
}

TEST_CASE("macaulay resultant is multihomogeneous of degree nine per slot") {
    Rng rng(179);
    TernaryForm f(3), g(3), h(3);
    for (std::size_t i = 0; i < f.terms(); ++i) {
        f[i] = rng.rat(3);
        g[i] = rng.rat(3);
        h[i] = rng.rat(3);
    }
    Rat base = resultant_cubics(f, g, h);
    TernaryForm f2 = f;
    for (std::size_t i = 0; i < f2.terms(); ++i) f2[i] *= 2;
    Rat p512(1);
    for (int i = 0; i < 9; ++i) p512 *= 2;
    CHECK(resultant_cubics(f2, g, h) == p512 * base);
}

TEST_CASE("section construction and the common kernel") {
    FanoSection sec = section_from_covectors(worked_covectors());
    CHECK(sec.p10.dim() == 11);
    CHECK(sec.seed == 0);
    CHECK_FALSE(sec.axis.has_value());

    // every kernel basis vector is annihilated by all three covectors
    for (std::size_t r = 0; r < sec.p10.dim(); ++r) {
        Point13 p;
        for (int k = 0; k < 14; ++k) p[k] = sec.p10.basis()(r, (std::size_t)k);
        CHECK(sec.annihilates(p));
        for (const auto& c : sec.c) CHECK(pair_cov(c, p) == 0);
    }

    // the covector map is the linear combination it claims to be
    Rng rng(181);
    Point13 probe;
    for (int k = 0; k < 14; ++k) probe[k] = rng.rat(4, 2);
    Point13 mix = sec.covector(Rat(2), Rat(-3), Rat(5));
    Rat want = Rat(2) * pair_cov(sec.c[0], probe) + Rat(-3) * pair_cov(sec.c[1], probe) +
               Rat(5) * pair_cov(sec.c[2], probe);
    CHECK(pair_cov(mix, probe) == want);

    // dependent covectors are rejected
    std::array<Point13, 3> dep = worked_covectors();
    dep[2] = slot_point(SU);
    CHECK_THROWS_AS((void)section_from_covectors(dep), std::invalid_argument);
}

TEST_CASE("worked dual quartic comes out exactly") {
    FanoSection sec = section_from_covectors(worked_covectors());
    DualQuartic q = dual_quartic(sec);
    CHECK(q.form == worked_quartic());
    CHECK_FALSE(q.degenerate);
    CHECK_FALSE(q.smooth);
    CHECK(q.resultant == 0);
    CHECK_FALSE(is_smooth_quartic(q));
}

TEST_CASE("a dual plane inside the boundary hyperplane section is degenerate") {
    // all three covectors supported on the Y block: the invariant restricts
    // to zero on their span
    SymMat3 Y1;
    Y1.at(0, 0) = 1;
    SymMat3 Y2;
    Y2.at(1, 2) = 1;
    std::array<Point13, 3> cs;
    cs[0].setY(conic_seed());
    cs[1].setY(Y1);
    cs[2].setY(Y2);
    FanoSection sec = section_from_covectors(cs);
    DualQuartic q = dual_quartic(sec);
    CHECK(q.degenerate);
    CHECK_FALSE(q.smooth);
    CHECK_THROWS_AS((void)is_smooth_quartic(q), std::invalid_argument);
}

TEST_CASE("smoothness certificates for the classic quartics") {
    CHECK(is_smooth_quartic(quartic_of(fermat_quartic())));
    CHECK(is_smooth_quartic(quartic_of(klein_quartic())));
    CHECK_FALSE(is_smooth_quartic(quartic_of(worked_quartic())));
}

TEST_CASE("random sections are seeded, reproducible and smooth") {
    FanoSection a = random_section(5), b = random_section(5);
    for (int i = 0; i < 3; ++i) CHECK(a.c[(std::size_t)i] == b.c[(std::size_t)i]);
    CHECK(a.seed == 5);
    CHECK(a.p10.dim() == 11);
    DualQuartic q = dual_quartic(a);
    CHECK(q.smooth);
    CHECK(q.resultant != 0);

    FanoSection other = random_section(6);
    bool same = true;
    for (int i = 0; i < 3; ++i) same = same && a.c[(std::size_t)i] == other.c[(std::size_t)i];
    CHECK_FALSE(same);
}

TEST_CASE("curve samples satisfy the quartic and are precision-stable") {
    FanoSection sec = random_section(3);
    DualQuartic q = dual_quartic(sec);
    REQUIRE(q.smooth);

    auto pts = sample_curve(q, 7, 60);
    REQUIRE(pts.size() == 7);
    for (const auto& pt : pts) {
        BigFloat scale(0);
        for (const auto& c : pt) scale = std::max(scale, c.abs());
        CHECK(scale > 0);
        BigFloat val = q.form.eval<CNum>(pt[0], pt[1], pt[2]).abs();
        CHECK(val < BigFloat("1e-40") * scale * scale * scale * scale);
    }

    CHECK(sample_curve(q, 0, 60).empty());

    // determinism at fixed precision
    auto again = sample_curve(q, 7, 60);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (int j = 0; j < 3; ++j) CHECK(pts[i][(std::size_t)j] == again[i][(std::size_t)j]);

    // index-for-index correspondence across precisions
    auto fine = sample_curve(q, 7, 120);
    REQUIRE(fine.size() == 7);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        NumVec a(pts[i].begin(), pts[i].end()), b(fine[i].begin(), fine[i].end());
        CHECK(projective_distance(a, b) < BigFloat("1e-20"));
    }
}

TEST_CASE("pivot of the canonical boundary parameter point") {
    FanoSection sec = section_from_covectors(worked_covectors());
    // parameter (0,0,1) is on the curve: the covector is (0:0:Y0:0)
    std::vector<std::array<CNum, 3>> params{{CNum(0), CNum(0), CNum(1)}};
    CurveSample cs = pivot_curve(sec, params, 60);
    REQUIRE(cs.points.size() == 1);
    const CurvePoint& cp = cs.points[0];
    CHECK(cp.ok);
    CHECK(cp.curve_residual < BigFloat("1e-50"));
    CHECK(cp.pivot_residual < BigFloat("1e-50"));
    // the pivot is (1:0:...:0) on the nose
    CHECK(cp.pivot[SU] == CNum(1));
    for (int k = 1; k < 14; ++k) CHECK(cp.pivot[k].abs() < BigFloat("1e-55"));
    // its plane is spanned by e1, e2, e3: no mass on the last three slots
    for (const auto& row : cp.plane)
        for (std::size_t j = 3; j < 6; ++j) CHECK(row[j].abs() < BigFloat("1e-50"));
    CHECK(cp.plane_alpha < BigFloat("1e-50"));
}

TEST_CASE("vertex conic transport at the canonical parameter point") {
    FanoSection sec = section_from_covectors(worked_covectors());
    std::vector<std::array<CNum, 3>> params{{CNum(0), CNum(0), CNum(1)}};
    CurveSample cs = pivot_curve(sec, params, 60);
    vertex_surface(sec, cs);
    const CurvePoint& cp = cs.points[0];
    REQUIRE(cp.has_conic);
    CHECK(cp.conic_frame_leak < BigFloat("1e-50"));
    // Y0 has orthonormal rows, so every singular value of the normalized
    // conic is 1; the characteristic cubic then has a triple root, which
    // caps the root-finder accuracy near the cube root of the precision
    CHECK(abs(cp.conic_min_singular - 1) < BigFloat("1e-15"));
    SymMat3 Y0 = conic_seed();
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            BigFloat want = abs(BigFloat(Y0.at(i, j)));
            CHECK(abs(cp.conic.at(i, j).abs() - want) < BigFloat("1e-45"));
        }
}

TEST_CASE("full sampled pipeline on a seeded section") {
    FanoSection sec = random_section(11);
    DualQuartic q = dual_quartic(sec);
    REQUIRE(q.smooth);
    auto params = sample_curve(q, 6, 60);
    CurveSample cs = pivot_curve(sec, params, 60);
    REQUIRE(cs.points.size() == 6);
    BigFloat tol = cs.tolerance();
    for (const auto& cp : cs.points) {
        CHECK(cp.ok);
        CHECK(cp.curve_residual < 10000 * tol);
        CHECK(cp.pivot_residual < 10000 * tol);
        CHECK(cp.plane_alpha < 10000 * tol);
        // the covector annihilates its own pivot: the pivot lies on X
        CHECK(pair_cov(cp.covector, cp.pivot).abs() < 10000 * tol);
    }
    CHECK(cs.pivots_distinct);
    CHECK(cs.min_pivot_distance > 1000 * tol);

    vertex_surface(sec, cs);
    for (const auto& cp : cs.points) {
        CHECK(cp.has_conic);
        CHECK(cp.conic_frame_leak < 10000 * tol);
        CHECK(cp.conic_min_singular > 1000 * tol);
    }

    FibrationReport fr = fibration_check(cs);
    CHECK(fr.pairs == 15);
    CHECK(fr.skipped == 0);
    CHECK(fr.failures == 0);
    CHECK(fr.pass());
}

TEST_CASE("conic cut on the section through a rational vertex") {
    // place the canonical vertex covector in the dual plane and take the
    // vertex e1, which lies on the canonical vertex conic 2st + w^2
    Rng rng(191);
    Vec6<Rat> e1{};
    e1[0] = 1;
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::array<Point13, 3> cs;
        cs[0].setY(conic_seed());
        for (int i = 1; i < 3; ++i)
            for (int k = 0; k < 14; ++k) cs[(std::size_t)i][k] = rng.rat(3);
        FanoSection sec;
        try {
            sec = section_from_covectors(cs);
        } catch (const std::invalid_argument&) {
            continue;
        }
        ConicOnX conic;
        try {
            conic = conic_on_X(sec, e1);
        } catch (const std::exception&) {
            continue;  // transversality failed for this draw
        }
        CHECK(conic.plane.dim() == 3);
        CHECK(canonical_scale(conic.witness) == canonical_scale(cs[0]));
        CHECK(det3(conic.form) != 0);  // rank-3 conic for this configuration

        // the restricted form agrees with the ambient quadric on the plane
        VertexQuadric Q = quadric_span(e1);
        for (int t = 0; t < 5; ++t) {
            std::array<Rat, 3> co{rng.rat(3), rng.rat(3), rng.rat(3)};
            Point13 v;
            for (std::size_t i = 0; i < 3; ++i)
                for (int k = 0; k < 14; ++k)
                    v[k] += co[i] * conic.plane.basis()(i, (std::size_t)k);
            Rat direct = Q.value_at(v);
            Rat through(0);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    through += co[(std::size_t)i] * conic.form.at(i, j) * co[(std::size_t)j];
            CHECK(direct == through);
        }

        // a vertex off the conic has no containing hyperplane in the pencil
        Vec6<Rat> e3{};
        e3[2] = 1;
        CHECK_THROWS_AS((void)conic_on_X(sec, e3), std::runtime_error);
        return;
    }
    FAIL("no transverse draw found for the conic restriction");
}

TEST_CASE("sections through a line annihilate the whole line") {
    IsotropicLine L(LinSubspace::from_vectors(
        {{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)},
         {Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)}},
        6));
    FanoSection sec = section_through_line(L, 9);
    REQUIRE(sec.axis.has_value());
    CHECK(*sec.axis == L);

    SigmaLine line = line_from_axis(L);
    long pairs[4][2] = {{1, 0}, {0, 1}, {1, 1}, {3, -2}};
    for (auto& st : pairs) {
        Point13 pt = line.at(Rat(st[0]), Rat(st[1]));
        CHECK(sec.annihilates(pt));
    }
    CHECK(dual_quartic(sec).smooth);

    // reproducible
    FanoSection again = section_through_line(L, 9);
    for (int i = 0; i < 3; ++i) CHECK(sec.c[(std::size_t)i] == again.c[(std::size_t)i]);
}

TEST_CASE("line-section property of the sampled vertex conics") {
    IsotropicLine L(LinSubspace::from_vectors(
        {{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)},
         {Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)}},
        6));
    FanoSection sec = section_through_line(L, 9);
    DualQuartic q = dual_quartic(sec);
    REQUIRE(q.smooth);
    auto params = sample_curve(q, 6, 60);
    CurveSample cs = pivot_curve(sec, params, 60);
    vertex_surface(sec, cs);
    LineSectionReport rep = c_l_section_check(sec, L, cs);
    CHECK(rep.failures == 0);
    CHECK(rep.pass());
    CHECK(rep.points.size() == 6);
    CHECK(rep.max_residual < BigFloat("1e-50"));
    for (const auto& p : rep.points) {
        CHECK(p.meet_ok);
        CHECK(p.pass);
    }
}

TEST_CASE("projective distance") {
    PrecisionScope scope(60);
    NumVec a{CNum(1), CNum(2), CNum(-1)};
    NumVec b = a;
    CNum lam(BigFloat(0), BigFloat(3));  // 3i
    for (auto& x : b) x = x * lam;
    CHECK(projective_distance(a, b) < BigFloat("1e-55"));

    NumVec c{CNum(1), CNum(0), CNum(0)}, d{CNum(0), CNum(1), CNum(0)};
    BigFloat far = projective_distance(c, d);
    CHECK(far > BigFloat("0.5"));
    CHECK(abs(projective_distance(c, d) - projective_distance(d, c)) < BigFloat("1e-55"));
}
