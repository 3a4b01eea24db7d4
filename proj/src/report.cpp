#include "lg3/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lg3/projection.hpp"

namespace lg3 {

void RunReport::add(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
}

bool RunReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

Json report_json(const RunReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json jc{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    return Json{{"command", rep.command}, {"seed", rep.seed},
                {"precision", rep.precision}, {"checks", checks},
                {"pass", rep.all_pass()}, {"wall_ms", rep.wall_ms}};
}

namespace {

SymMat3 random_sym(Rng& rng, long num_max = 5, long den_max = 3) {
    SymMat3 X;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) X.at(i, j) = rng.rat(num_max, den_max);
    return X;
}

Point13 random_point(Rng& rng) {
    Point13 p;
    for (int k = 0; k < 14; ++k) p[k] = rng.rat(9, 4);
    return p;
}

Point13 canonical_covector() {
    // hyperplane with vertex conic 2 x1 x2 + x3^2 in the plane <e1,e2,e3>
    Point13 c;
    Sym3<Rat> y0;
    y0.at(0, 1) = 1;
    y0.at(2, 2) = 1;
    c.setY(y0);
    return c;
}

std::string fail_at(const char* what, long i) {
    std::ostringstream os;
    os << what << " at trial " << i;
    return os.str();
}

// ---- core ---------------------------------------------------------------

void suite_core(RunReport& rep, Rng& rng, long trials) {
    {
        Rng r = rng.split();
        bool ok = true;
        std::string detail;
        for (long i = 0; i < trials && ok; ++i) {
            Point13 p = exp_map(random_sym(r));
            if (sigma_residual(p) != 0) { ok = false; detail = fail_at("nonzero residual", i); }
        }
        rep.add("core/exp-map-on-variety", ok, detail);
    }
    {
        Rng r = rng.split();
        bool ok = true;
        std::string detail;
        for (long i = 0; i < trials && ok; ++i) {
            Point13 p = random_point(r);
            Point13 g = F_grad(p);
            Rat dot(0);
            for (int k = 0; k < 14; ++k) dot += p[k] * g[k];
            if (dot != 4 * F_eval(p)) { ok = false; detail = fail_at("Euler identity broken", i); }
        }
        rep.add("core/euler-identity", ok, detail);
    }
    {
        Rng r = rng.split();
        bool ok = true;
        std::string detail;
        for (long i = 0; i < trials && ok; ++i) {
            Point13 p = exp_map(random_sym(r));
            if (i % 3 == 0) p = apply14(rho_wedge3(random_sp3(r)), p);
            if (!F_grad(p).is_zero()) { ok = false; detail = fail_at("gradient not zero", i); }
        }
        rep.add("core/gradient-vanishes-on-variety", ok, detail);
    }
    {
        Rng r = rng.split();
        bool ok = true;
        std::string detail;
        for (long i = 0; i < trials && ok; ++i) {
            // rank <= 2 symmetric X gives a singular point (a : X : 0 : 0)
            Vec6<Rat> v{}, w{};
            for (int k = 0; k < 3; ++k) { v[(std::size_t)k] = r.rat(5, 2); w[(std::size_t)k] = r.rat(5, 2); }
            SymMat3 X;
            for (int a = 0; a < 3; ++a)
                for (int b = a; b < 3; ++b)
                    X.at(a, b) = v[(std::size_t)a] * v[(std::size_t)b] - w[(std::size_t)a] * w[(std::size_t)b];
            Point13 p;
            p[SU] = r.rat(5, 2);
            p.setX(X);
            if (det3(X) != 0) { ok = false; detail = fail_at("rank trick broke", i); break; }
            if (!F_grad(p).is_zero()) { ok = false; detail = fail_at("gradient not zero", i); }
        }
        rep.add("core/gradient-vanishes-on-cone-points", ok, detail);
    }
    {
        Rng r = rng.split();
        bool ok = true;
        std::string detail;
        for (long i = 0; i < trials && ok; ++i) {
            Point13 p;
            p.setY(random_sym(r));
            p[SZ] = r.rat(5, 2);
            Point13 g = F_grad(p);
            Point13 want;
            want[SU] = 4 * det3(p.Yblock());
            if (!(g == want)) { ok = false; detail = fail_at("boundary gradient value wrong", i); }
        }
        rep.add("core/boundary-gradient-value", ok, detail);
    }
    {
        Rng r = rng.split();
        bool ok = true;
        std::string detail;
        long n = std::min<long>(trials, 20);
        for (long i = 0; i < n && ok; ++i) {
            RatMat R = rho_wedge3(random_sp3(r));
            RatMat D = contragredient14(R);
            Point13 c = random_point(r), p = random_point(r);
            if (pair_cov(apply14(D, c), apply14(R, p)) != pair_cov(c, p)) {
                ok = false;
                detail = fail_at("pairing not invariant", i);
            }
        }
        rep.add("core/pairing-equivariance", ok, detail);
    }
    {
        Rng r = rng.split();
        bool ok = true;
        std::string detail;
        Point13 e123;
        e123[SU] = 1;
        Point13 img = correlation_J(e123);
        Point13 want;
        want[SZ] = 1;
        if (!(img == want)) { ok = false; detail = "J(e123) misses (0:0:0:1)"; }
        for (long i = 0; i < trials && ok; ++i) {
            Point13 p = random_point(r);
            Point13 m = correlation_J(correlation_J(p));
            for (int k = 0; k < 14 && ok; ++k)
                if (m[k] != -p[k]) { ok = false; detail = fail_at("J^2 != -id", i); }
            Point13 s = exp_map(random_sym(r));
            if (ok && !is_on_sigma(correlation_J(s))) {
                ok = false;
                detail = fail_at("J leaves the variety", i);
            }
        }
        rep.add("core/correlation-involution", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        Point13 origin = exp_map(SymMat3{});
        if (classify_orbit(origin) != OrbitClass::Sigma) { ok = false; detail = "exp(0)"; }
        Point13 fpt = canonical_covector();
        fpt[SZ] = 1;
        if (ok && classify_orbit(fpt) != OrbitClass::FMinusOmega) { ok = false; detail = "(0:0:Y0:1)"; }
        Point13 gen;
        gen[SU] = 1;
        gen[SZ] = 1;
        if (ok && classify_orbit(gen) != OrbitClass::Generic) { ok = false; detail = "(1:0:0:1)"; }
        Point13 om;
        om[SU] = 1;
        SymMat3 d;
        d.at(0, 0) = 1;
        d.at(1, 1) = 1;
        om.setX(d);
        if (ok && classify_orbit(om) != OrbitClass::OmegaMinusSigma) {
            ok = false;
            detail = "(1:diag(1,1,0):0:0)";
        }
        rep.add("core/orbit-representatives", ok, detail);
    }
}

// ---- incidence ----------------------------------------------------------

/// X with zero first row/column: the plane of exp(X) contains e1.
SymMat3 sym_through_e1(Rng& rng) {
    SymMat3 X;
    for (int i = 1; i < 3; ++i)
        for (int j = i; j < 3; ++j) X.at(i, j) = rng.rat(5, 2);
    return X;
}

void suite_incidence(RunReport& rep, Rng& rng, long trials) {
    {
        bool ok = true;
        std::string detail;
        VertexConic vc = vertex_conic(canonical_covector());
        Point13 want;
        want[SU] = 1;
        if (!(vc.pivot == want)) { ok = false; detail = "pivot is not (1:0:0:0)"; }
        Sym3<Rat> y0;
        y0.at(0, 1) = 1;
        y0.at(2, 2) = 1;
        if (ok && !(vc.form_matrix == y0)) { ok = false; detail = "conic matrix differs from 2x1x2+x3^2"; }
        for (int i = 0; i < 3 && ok; ++i)
            for (int k = 0; k < 6; ++k)
                if (vc.plane[(std::size_t)i][(std::size_t)k] != Rat(i == k ? 1 : 0)) {
                    ok = false;
                    detail = "plane is not <e1,e2,e3>";
                }
        rep.add("incidence/canonical-vertex-conic", ok, detail);
    }
    {
        Rng r = rng.split();
        bool ok = true;
        std::string detail;
        long n = std::min<long>(trials, 20);
        Point13 c = canonical_covector();
        for (long i = 0; i < n && ok; ++i) {
            Sp3Element g = random_sp3(r);
            RatMat R = rho_wedge3(g);
            Point13 ct = apply14(contragredient14(R), c);
            VertexConic vc = vertex_conic(ct);
            Point13 want;
            want[SU] = 1;
            if (!(vc.pivot == canonical_scale(apply14(R, want)))) {
                ok = false;
                detail = fail_at("pivot not equivariant", i);
                break;
            }
            // rational point of the canonical conic, pushed through g
            Rat b = r.rat_nonzero(4, 2), cc = r.rat_nonzero(4, 2);
            Vec6<Rat> x{};
            x[0] = cc * cc;
            x[1] = -2 * b * b;
            x[2] = -2 * b * cc;
            Vec6<Rat> gx = g.apply(x);
            if (!span_in_hyperplane(ct, quadric_span(gx))) {
                ok = false;
                detail = fail_at("transported vertex leaves the hyperplane", i);
                break;
            }
            // and it satisfies the transported conic equation
            RatMat A(6, 3);
            for (int rr2 = 0; rr2 < 6; ++rr2)
                for (int j = 0; j < 3; ++j)
                    A((std::size_t)rr2, (std::size_t)j) = vc.plane[(std::size_t)j][(std::size_t)rr2];
            std::vector<Rat> rhs(gx.begin(), gx.end());
            auto a = solve(A, rhs);
            Rat val(0);
            for (int p2 = 0; p2 < 3; ++p2)
                for (int q2 = 0; q2 < 3; ++q2)
                    val += a[(std::size_t)p2] * vc.form_matrix.at(std::min(p2, q2), std::max(p2, q2))
                         * a[(std::size_t)q2];
            if (val != 0) {
                ok = false;
                detail = fail_at("transported point misses the conic", i);
            }
        }
        rep.add("incidence/vertex-conic-equivariance", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        VertexQuadric Q = quadric_span(Vec6<Rat>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
        static const Slot slots[5] = {SU, SX22, SX23, SX33, SY11};
        for (int i = 0; i < 5 && ok; ++i)
            for (int k = 0; k < 14; ++k)
                if (Q.span.basis()((std::size_t)i, (std::size_t)k) != Rat(k == slots[i] ? 1 : 0)) {
                    ok = false;
                    detail = "span misses the (u,X22,X23,X33,Y11) coordinates";
                }
        if (ok && rank_of(Q.form) != 5) { ok = false; detail = "form rank below 5"; }
        Point13 c = canonical_covector();
        if (ok && !span_in_hyperplane(c, Q)) { ok = false; detail = "Q_e1 not inside H_c"; }
        Vec6<Rat> e3{};
        e3[2] = 1;
        if (ok && span_in_hyperplane(c, quadric_span(e3))) { ok = false; detail = "Q_e3 inside H_c"; }
        rep.add("incidence/quadric-span-canonical", ok, detail);
    }
    {
        Rng r = rng.split();
        bool ok = true;
        std::string detail;
        long n = std::min<long>(trials, 25);
        for (long i = 0; i < n && ok; ++i) {
            // random vertex, random plane through it: transported chart points
            Sp3Element g = random_sp3(r);
            Vec6<Rat> x = g.apply(Vec6<Rat>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
            VertexQuadric Q = quadric_span(x);
            Point13 p = apply14(rho_wedge3(g), exp_map(sym_through_e1(r)));
            if (!Q.contains(p) || Q.value_at(p) != 0) {
                ok = false;
                detail = fail_at("plane through the vertex escapes its quadric", i);
            }
        }
        rep.add("incidence/quadric-holds-its-planes", ok, detail);
    }
    {
        Rng r = rng.split();
        bool ok = true;
        std::string detail;
        long n = std::min<long>(trials, 12);
        for (long i = 0; i < n && ok; ++i) {
            Sp3Element g = random_sp3(r);
            std::vector<std::vector<Rat>> rows;
            Vec6<Rat> a = g.apply(Vec6<Rat>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
            Vec6<Rat> b = g.apply(Vec6<Rat>{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)});
            rows.emplace_back(a.begin(), a.end());
            rows.emplace_back(b.begin(), b.end());
            IsotropicLine L(LinSubspace::from_vectors(rows, 6));
            SigmaLine l = line_from_axis(L);
            if (!(axis_of_line(l.p0(), l.p1()) == L)) {
                ok = false;
                detail = fail_at("axis does not round-trip", i);
                break;
            }
            if (!is_on_sigma(l.at(Rat(2), Rat(-3))) || !is_on_sigma(l.at(Rat(1), Rat(1)))) {
                ok = false;
                detail = fail_at("pencil point off the variety", i);
            }
        }
        rep.add("incidence/line-axis-roundtrip", ok, detail);
    }
    {
        Rng r = rng.split();
        bool ok = true;
        std::string detail;
        long n = std::min<long>(trials, 12);
        for (long i = 0; i < n && ok; ++i) {
            Point13 s1 = exp_map(sym_through_e1(r));
            Point13 s2 = exp_map(sym_through_e1(r));
            Point13 s3 = exp_map(sym_through_e1(r));
            try {
                Vec6<Rat> v = conic_vertex(s1, s2, s3);
                Vec6<Rat> e1{};
                e1[0] = 1;
                LinSubspace sv = LinSubspace::from_vectors({{v.begin(), v.end()}}, 6);
                if (!sv.contains(std::vector<Rat>(e1.begin(), e1.end()))) {
                    ok = false;
                    detail = fail_at("recovered vertex is not e1", i);
                }
            } catch (const std::exception&) {
                // a degenerate draw (planes sharing a line) is legitimate; skip
            }
        }
        rep.add("incidence/common-vertex-recovery", ok, detail);
    }
}

// ---- projection ---------------------------------------------------------

void suite_projection(RunReport& rep, Rng& rng, long trials) {
    {
        Rng r = rng.split();
        bool ok = true;
        std::string detail;
        long per_line = std::max<long>(1, trials / 3);
        for (int li = 0; li < 3 && ok; ++li) {
            Sp3Element g = random_sp3(r);
            std::vector<std::vector<Rat>> rows;
            Vec6<Rat> a = g.apply(Vec6<Rat>{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)});
            Vec6<Rat> b = g.apply(Vec6<Rat>{Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)});
            rows.emplace_back(a.begin(), a.end());
            rows.emplace_back(b.begin(), b.end());
            ProjectionData pd = projection_center(line_from_axis(IsotropicLine(
                LinSubspace::from_vectors(rows, 6))));
            long done = 0;
            for (long i = 0; done < per_line && i < 4 * per_line && ok; ++i) {
                Point13 p = exp_map(random_sym(r));
                if (in_base_locus(pd, p)) continue;  // measure-zero draw, skip
                try {
                    (void)double_project(pd, p);  // asserts both routes agree
                    ++done;
                } catch (const std::domain_error&) {
                    continue;
                } catch (const std::exception& e) {
                    ok = false;
                    detail = fail_at(e.what(), i);
                }
            }
        }
        rep.add("projection/both-routes-agree", ok, detail);
    }
    {
        Rng r = rng.split();
        bool ok = true;
        std::string detail;
        // canonical axis <e2,e3>: the projection must read off the first
        // adjoint row and the determinant, coordinate for coordinate
        std::vector<std::vector<Rat>> rows = {{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)},
                                              {Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)}};
        ProjectionData pd = projection_center(line_from_axis(IsotropicLine(
            LinSubspace::from_vectors(rows, 6))));
        for (long i = 0; i < trials && ok; ++i) {
            SymMat3 X = random_sym(r);
            Rat x11 = X.at(0, 0), x12 = X.at(0, 1), x13 = X.at(0, 2);
            Rat x22 = X.at(1, 1), x23 = X.at(1, 2), x33 = X.at(2, 2);
            std::array<Rat, 4> want = {
                x22 * x33 - x23 * x23,
                x13 * x23 - x12 * x33,
                x12 * x23 - x13 * x22,
                x11 * (x22 * x33 - x23 * x23) - x12 * (x12 * x33 - x13 * x23)
                    + x13 * (x12 * x23 - x13 * x22)};
            bool zero = true;
            for (const auto& wv : want)
                if (wv != 0) zero = false;
            if (zero) continue;  // the base locus of the canonical chart
            Point13 p = exp_map(X);
            if (in_base_locus(pd, p)) continue;
            auto img = double_project(pd, p);
            // compare projectively
            int piv = -1;
            for (int k = 0; k < 4 && piv < 0; ++k)
                if (want[(std::size_t)k] != 0) piv = k;
            Rat f = img[(std::size_t)piv] / want[(std::size_t)piv];
            if (f == 0) { ok = false; detail = fail_at("zero image", i); break; }
            for (int k = 0; k < 4 && ok; ++k)
                if (img[(std::size_t)k] != f * want[(std::size_t)k]) {
                    ok = false;
                    detail = fail_at("formula mismatch", i);
                }
        }
        rep.add("projection/canonical-adjoint-formula", ok, detail);
    }
    {
        Rng r = rng.split();
        bool ok = true;
        std::string detail;
        std::vector<std::vector<Rat>> rows = {{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)},
                                              {Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)}};
        SigmaLine l = line_from_axis(IsotropicLine(LinSubspace::from_vectors(rows, 6)));
        ProjectionData pd = projection_center(l);
        // the line itself lies in the base locus; so does any plane meeting
        // the axis 4-space in a line
        for (long i = 0; i < std::min<long>(trials, 10) && ok; ++i) {
            Point13 p = l.at(Rat(i + 1), Rat(2 * i - 3));
            if (!in_base_locus(pd, p)) { ok = false; detail = fail_at("line point escapes the base locus", i); }
        }
        if (ok) {
            long misses = 0;
            for (long i = 0; i < std::min<long>(trials, 10); ++i)
                if (in_base_locus(pd, exp_map(random_sym(r)))) ++misses;
            if (misses > 0) { ok = false; detail = "generic chart point sits in the base locus"; }
        }
        rep.add("projection/base-locus-membership", ok, detail);
    }
}

// ---- section ------------------------------------------------------------

void suite_section(RunReport& rep, Rng& rng, long trials, unsigned digits10) {
    std::uint64_t seed = rng.next_u64();
    long n_points = std::max<long>(4, std::min<long>(trials, 10));
    {
        bool ok = true;
        std::string detail;
        try {
            FanoSection sec = random_section(seed);
            DualQuartic q = dual_quartic(sec);
            if (!q.smooth) { ok = false; detail = "dual quartic not smooth"; }
            rep.add("section/dual-quartic-smooth", ok, detail);
            if (!ok) return;

            auto params = sample_curve(q, (std::size_t)n_points, digits10);
            CurveSample cs = pivot_curve(sec, params, digits10);
            BigFloat tol = cs.tolerance();
            BigFloat worst(0);
            bool all_ok = true;
            for (const auto& cp : cs.points) {
                if (!cp.ok) all_ok = false;
                if (cp.pivot_residual > worst) worst = cp.pivot_residual;
            }
            std::ostringstream os;
            os << "max pivot residual " << worst.str(3);
            rep.add("section/pivot-residuals", all_ok && worst < 10000 * tol, os.str());
            rep.add("section/pivots-distinct", cs.pivots_distinct,
                    "min distance " + cs.min_pivot_distance.str(3));

            vertex_surface(sec, cs);
            bool conics = true;
            BigFloat thin(2);
            for (const auto& cp : cs.points) {
                if (!cp.ok || !cp.has_conic) conics = false;
                else if (cp.conic_min_singular < thin) thin = cp.conic_min_singular;
            }
            rep.add("section/vertex-conics-smooth", conics && thin > 1000 * tol,
                    "min singular value " + thin.str(3));

            FibrationReport fr = fibration_check(cs);
            std::ostringstream fs;
            fs << fr.pairs << " pairs, " << fr.failures << " failures";
            rep.add("section/fibration-disjoint-planes", fr.pass(), fs.str());
        } catch (const std::exception& e) {
            rep.add("section/pipeline", false, e.what());
        }
    }
    {
        // a section through the canonical line, with the section property
        bool ok = true;
        std::string detail;
        try {
            std::vector<std::vector<Rat>> rows = {{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)},
                                                  {Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)}};
            IsotropicLine L(LinSubspace::from_vectors(rows, 6));
            FanoSection sec = section_through_line(L, seed ^ 0x5ec710ULL);
            DualQuartic q = dual_quartic(sec);
            auto params = sample_curve(q, (std::size_t)n_points, digits10);
            CurveSample cs = pivot_curve(sec, params, digits10);
            vertex_surface(sec, cs);
            LineSectionReport lr = c_l_section_check(sec, L, cs);
            std::ostringstream os;
            os << lr.points.size() << " points, max residual " << lr.max_residual.str(3);
            ok = lr.pass();
            detail = os.str();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        rep.add("section/line-section-property", ok, detail);
    }
}

}  // namespace

RunReport verify_suite(const std::string& suite, std::uint64_t seed, long trials,
                       unsigned digits10) {
    RunReport rep;
    rep.command = "verify-lemmas --suite " + suite;
    rep.seed = seed;
    rep.precision = digits10;
    if (trials <= 0) return rep;
    Rng rng(seed);
    if (suite == "core")
        suite_core(rep, rng, trials);
    else if (suite == "incidence")
        suite_incidence(rep, rng, trials);
    else if (suite == "projection")
        suite_projection(rep, rng, trials);
    else if (suite == "section")
        suite_section(rep, rng, trials, digits10);
    else
        throw std::invalid_argument("unknown suite '" + suite +
                                    "' (expected core, incidence, projection, section)");
    return rep;
}

}  // namespace lg3
