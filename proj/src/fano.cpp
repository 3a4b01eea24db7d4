#include "lg3/fano.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lg3/incidence.hpp"

namespace lg3 {

namespace {

NumVec vec14(const NumPoint13& p) {
    NumVec v(14);
    for (int k = 0; k < 14; ++k) v[k] = p[k];
    return v;
}

NumPoint13 pt14(const NumVec& v) {
    NumPoint13 p;
    for (int k = 0; k < 14; ++k) p[k] = v[k];
    return p;
}

BigFloat max_abs14(const NumPoint13& p) {
    BigFloat m(0);
    for (int k = 0; k < 14; ++k) {
        BigFloat a = p[k].abs();
        if (a > m) m = a;
    }
    return m;
}

void normalize6(Vec6<CNum>& v) {
    NumVec t(v.begin(), v.end());
    num_normalize(t);
    for (int i = 0; i < 6; ++i) v[i] = t[i];
}

}  // namespace

Point13 FanoSection::covector(const Rat& s, const Rat& t, const Rat& w) const {
    Point13 out;
    for (int k = 0; k < 14; ++k) out[k] = s * c[0][k] + t * c[1][k] + w * c[2][k];
    return out;
}

NumPoint13 FanoSection::covector_num(const CNum& s, const CNum& t, const CNum& w) const {
    NumPoint13 out;
    for (int k = 0; k < 14; ++k)
        out[k] = s * CNum(c[0][k]) + t * CNum(c[1][k]) + w * CNum(c[2][k]);
    return out;
}

bool FanoSection::annihilates(const Point13& p) const {
    for (int i = 0; i < 3; ++i)
        if (pair_cov(c[i], p) != 0) return false;
    return true;
}

FanoSection section_from_covectors(const std::array<Point13, 3>& c, std::uint64_t seed) {
    RatMat M(3, 14);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 14; ++k) M(i, k) = Rat((long)kPairWeight[k]) * c[i][k];
    RatMat Mc = M;
    auto ker = kernel_of(Mc);
    if (ker.size() != 11)
        throw std::invalid_argument("section covectors are not independent");
    FanoSection sec;
    sec.c = c;
    sec.p10 = LinSubspace::from_vectors(ker, 14);
    sec.seed = seed;
    return sec;
}

FanoSection random_section(std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::array<Point13, 3> c;
        for (auto& ci : c)
            for (int k = 0; k < 14; ++k) ci[k] = Rat(rng.range(-5, 5));
        FanoSection sec;
        try {
            sec = section_from_covectors(c, seed);
        } catch (const std::invalid_argument&) {
            continue;
        }
        DualQuartic q = dual_quartic(sec);
        if (q.degenerate || !q.smooth) continue;
        return sec;
    }
    std::ostringstream os;
    os << "random_section: no smooth section in 64 draws from seed " << seed;
    throw std::runtime_error(os.str());
}

DualQuartic dual_quartic(const FanoSection& sec) {
    DualQuartic q;
    q.form = interpolate_ternary_form(4, [&](const Rat& s, const Rat& t, const Rat& w) {
        return F_eval(sec.covector(s, t, w));
    });
    // independent spot checks on nodes the interpolation never saw
    static const long fresh[][3] = {{2, 3, 1}, {-1, 2, 3}, {5, -1, 2}, {1, 7, -2}, {-3, -2, 1}};
    for (auto& n : fresh) {
        Rat s((long)n[0]), t((long)n[1]), w((long)n[2]);
        if (q.form.eval<Rat>(s, t, w) != F_eval(sec.covector(s, t, w)))
            throw std::logic_error("dual_quartic: interpolation mismatch off the node set");
    }
    q.degenerate = q.form.is_zero();
    if (q.degenerate) {
        q.smooth = false;
        q.resultant = 0;
        return q;
    }
    q.resultant = resultant_cubics(q.form.diff(0), q.form.diff(1), q.form.diff(2));
    q.smooth = (q.resultant != 0);
    return q;
}

bool is_smooth_quartic(const DualQuartic& q) {
    if (q.degenerate)
        throw std::invalid_argument("is_smooth_quartic: the restriction is identically zero");
    return resultant_cubics(q.form.diff(0), q.form.diff(1), q.form.diff(2)) != 0;
}

std::vector<std::array<CNum, 3>> sample_curve(const DualQuartic& q, std::size_t n,
                                              unsigned digits10) {
    if (q.degenerate)
        throw std::invalid_argument("sample_curve: degenerate quartic has no curve");
    PrecisionScope scope(digits10);

    // rational base point off the curve; the pencil of lines through it
    // sweeps out sample points four at a time
    static const long cand[][3] = {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1},
                                   {2, 1, 1}, {1, 2, 1}, {1, 3, 2}, {3, 1, 2}};
    std::array<Rat, 3> base{};
    bool have_base = false;
    for (auto& b : cand) {
        Rat v = q.form.eval<Rat>(Rat(b[0]), Rat(b[1]), Rat(b[2]));
        if (v != 0) {
            base = {Rat(b[0]), Rat(b[1]), Rat(b[2])};
            have_base = true;
            break;
        }
    }
    if (!have_base)
        throw std::runtime_error("sample_curve: every candidate base point lies on the curve");

    // a pair of sample points closer than this is one geometric point seen
    // twice (a tangent line); the cutoff is precision-independent so the
    // same points come back at every working precision
    const BigFloat dedupe = pow(BigFloat(10), -10);

    std::vector<std::array<CNum, 3>> pts;
    for (long k = 0; pts.size() < n; ++k) {
        if (k > 200)
            throw std::runtime_error("sample_curve: pencil exhausted before enough points");
        std::array<Rat, 3> dir = {Rat(0), Rat(1), Rat(k)};
        // restriction of the quartic to the line, by exact interpolation in t
        RatMat V(5, 5);
        std::vector<Rat> val(5);
        for (long t = 0; t <= 4; ++t) {
            Rat m(1);
            for (int c = 0; c < 5; ++c) {
                V((std::size_t)t, (std::size_t)c) = m;
                m *= Rat(t);
            }
            val[(std::size_t)t] = q.form.eval<Rat>(base[0] + Rat(t) * dir[0],
                                                   base[1] + Rat(t) * dir[1],
                                                   base[2] + Rat(t) * dir[2]);
        }
        auto coef = solve(V, val);
        std::vector<CNum> cc(5);
        for (int i = 0; i < 5; ++i) cc[i] = CNum(coef[(std::size_t)i]);
        auto rr = roots_univariate(cc, digits10);

        // precision-stable ordering: coarse rounding keys cannot flip when
        // the roots move by less than 1e-8 between precisions
        std::sort(rr.roots.begin(), rr.roots.end(), [](const CNum& a, const CNum& b) {
            BigFloat ar = round(a.re * 100000000), br = round(b.re * 100000000);
            if (ar != br) return ar < br;
            return round(a.im * 100000000) < round(b.im * 100000000);
        });

        for (const CNum& t : rr.roots) {
            if (pts.size() >= n) break;
            NumVec p = {CNum(base[0]) + t * CNum(dir[0]), CNum(base[1]) + t * CNum(dir[1]),
                        CNum(base[2]) + t * CNum(dir[2])};
            num_normalize(p);
            bool dup = false;
            for (const auto& old : pts) {
                NumVec o(old.begin(), old.end());
                if (projective_distance(p, o) < dedupe) {
                    dup = true;
                    break;
                }
            }
            if (!dup) pts.push_back({p[0], p[1], p[2]});
        }
    }
    return pts;
}

BigFloat projective_distance(const NumVec& p, const NumVec& q) {
    CNum h(0);
    BigFloat np(0), nq(0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        h += p[i] * q[i].conj();
        np += p[i].abs2();
        nq += q[i].abs2();
    }
    if (np == 0 || nq == 0) return BigFloat(2);
    BigFloat s = 1 - h.abs2() / (np * nq);
    if (s < 0) s = 0;
    return sqrt(s);
}

CurveSample pivot_curve(const FanoSection& sec,
                        const std::vector<std::array<CNum, 3>>& params, unsigned digits10) {
    PrecisionScope scope(digits10);
    const BigFloat tol = zero_threshold(digits10);
    CurveSample cs;
    cs.digits = digits10;

    for (const auto& prm : params) {
        CurvePoint cp;
        cp.param = prm;
        NumVec cv = vec14(sec.covector_num(prm[0], prm[1], prm[2]));
        num_normalize(cv);
        cp.covector = pt14(cv);
        cp.curve_residual = F_eval(cp.covector).abs();

        cp.grad_norm = max_abs14(F_grad(cp.covector));
        NumVec gv = vec14(traced_grad(cp.covector));
        num_normalize(gv);
        cp.pivot = pt14(gv);
        cp.pivot_residual = sigma_residual_num(cp.pivot);

        if (cp.grad_norm <= 1000 * tol) {
            cp.ok = false;
            cp.note = "gradient vanishes: the covector sits at a singular point of the dual";
            cs.points.push_back(cp);
            continue;
        }
        try {
            cp.plane = plane_of_num(cp.pivot, digits10);
        } catch (const std::exception& e) {
            cp.ok = false;
            cp.note = e.what();
            cs.points.push_back(cp);
            continue;
        }
        for (auto& b : cp.plane) normalize6(b);
        BigFloat worst(0);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                BigFloat a = alpha_form(cp.plane[(std::size_t)i], cp.plane[(std::size_t)j]).abs();
                if (a > worst) worst = a;
            }
        cp.plane_alpha = worst;
        cs.points.push_back(cp);
    }

    cs.min_pivot_distance = BigFloat(2);
    for (std::size_t i = 0; i < cs.points.size(); ++i) {
        if (!cs.points[i].ok) continue;
        for (std::size_t j = i + 1; j < cs.points.size(); ++j) {
            if (!cs.points[j].ok) continue;
            BigFloat d = projective_distance(vec14(cs.points[i].pivot), vec14(cs.points[j].pivot));
            if (d < cs.min_pivot_distance) cs.min_pivot_distance = d;
        }
    }
    cs.pivots_distinct = cs.min_pivot_distance > 1000 * tol;
    return cs;
}

void vertex_surface(const FanoSection& sec, CurveSample& cs) {
    (void)sec;  // the covector already carries the section data per point
    PrecisionScope scope(cs.digits);
    const BigFloat tol = zero_threshold(cs.digits);

    for (auto& cp : cs.points) {
        if (!cp.ok) continue;
        try {
            std::vector<Vec6<CNum>> prefix(cp.plane.begin(), cp.plane.end());
            NumMat g = symplectic_frame_num(prefix, cs.digits);
            NumMat R = rho_wedge3_num(g);
            // pull the covector to the frame where the pivot is the origin
            // of the chart: rho_dual(g)^-1 = W^-1 R^T W on slot coordinates
            NumPoint13 c0;
            for (int i = 0; i < 14; ++i) {
                CNum acc(0);
                for (int j = 0; j < 14; ++j)
                    acc += R(j, i) * CNum((long)kPairWeight[j]) * cp.covector[j];
                c0[i] = acc / CNum((long)kPairWeight[i]);
            }
            NumVec c0v = vec14(c0);
            num_normalize(c0v);
            c0 = pt14(c0v);
            BigFloat leak(0);
            for (int k = SU; k <= SX33; ++k) {
                BigFloat a = c0[k].abs();
                if (a > leak) leak = a;
            }
            cp.conic_frame_leak = leak;

            Sym3<CNum> Y0 = c0.Yblock();
            CNum big(0);
            for (int i = 0; i < 3; ++i)
                for (int j = i; j < 3; ++j)
                    if (Y0.at(i, j).abs2() > big.abs2()) big = Y0.at(i, j);
            if (big.abs() <= tol)
                throw std::runtime_error("vertex conic matrix is numerically zero");
            for (int i = 0; i < 3; ++i)
                for (int j = i; j < 3; ++j) Y0.at(i, j) /= big;
            cp.conic = Y0;
            cp.has_conic = true;

            // smallest singular value from the eigenvalues of A^H A
            Mat<CNum> A = Y0.full();
            Mat<CNum> H(3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    CNum acc(0);
                    for (int k = 0; k < 3; ++k)
                        acc += A((std::size_t)k, (std::size_t)i).conj() * A((std::size_t)k, (std::size_t)j);
                    H((std::size_t)i, (std::size_t)j) = acc;
                }
            CNum tr = H(0, 0) + H(1, 1) + H(2, 2);
            CNum m01 = H(0, 0) * H(1, 1) - H(0, 1) * H(1, 0);
            CNum m02 = H(0, 0) * H(2, 2) - H(0, 2) * H(2, 0);
            CNum m12 = H(1, 1) * H(2, 2) - H(1, 2) * H(2, 1);
            CNum det = H(0, 0) * (H(1, 1) * H(2, 2) - H(1, 2) * H(2, 1))
                     - H(0, 1) * (H(1, 0) * H(2, 2) - H(1, 2) * H(2, 0))
                     + H(0, 2) * (H(1, 0) * H(2, 1) - H(1, 1) * H(2, 0));
            auto ev = roots_univariate({-det, m01 + m02 + m12, -tr, CNum(1)}, cs.digits);
            BigFloat mn = ev.roots[0].re;
            for (const auto& r : ev.roots)
                if (r.re < mn) mn = r.re;
            if (mn < 0) mn = 0;
            cp.conic_min_singular = sqrt(mn);
            if (cp.conic_min_singular <= 1000 * tol && cp.note.empty())
                cp.note = "vertex conic is numerically singular";
        } catch (const std::exception& e) {
            cp.ok = false;
            cp.note = e.what();
        }
    }
}

FibrationReport fibration_check(const CurveSample& cs) {
    PrecisionScope scope(cs.digits);
    const BigFloat tol = zero_threshold(cs.digits);
    FibrationReport rep;
    for (std::size_t i = 0; i < cs.points.size(); ++i) {
        if (!cs.points[i].ok) continue;
        for (std::size_t j = i + 1; j < cs.points.size(); ++j) {
            if (!cs.points[j].ok) continue;
            NumVec pi(cs.points[i].param.begin(), cs.points[i].param.end());
            NumVec pj(cs.points[j].param.begin(), cs.points[j].param.end());
            if (projective_distance(pi, pj) <= 1000 * tol) {
                ++rep.skipped;
                continue;
            }
            ++rep.pairs;
            NumMat M(6, 6);
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 6; ++c) {
                    M((std::size_t)r, (std::size_t)c) = cs.points[i].plane[(std::size_t)r][(std::size_t)c];
                    M((std::size_t)(3 + r), (std::size_t)c) = cs.points[j].plane[(std::size_t)r][(std::size_t)c];
                }
            if (num_rank(M, cs.digits) != 6) {
                ++rep.failures;
                rep.failed_pairs.emplace_back(i, j);
            }
        }
    }
    return rep;
}

ConicOnX conic_on_X(const FanoSection& sec, const Vec6<Rat>& x) {
    VertexQuadric Q = quadric_span(x);

    // a hyperplane of the section's dual plane containing the whole span
    RatMat A(5, 3);
    for (std::size_t r = 0; r < 5; ++r) {
        Point13 b;
        for (int k = 0; k < 14; ++k) b[k] = Q.span.basis()(r, (std::size_t)k);
        for (int i = 0; i < 3; ++i) A(r, (std::size_t)i) = pair_cov(sec.c[i], b);
    }
    RatMat Ac = A;
    auto ker = kernel_of(Ac);
    if (ker.empty())
        throw std::runtime_error(
            "conic_on_X: no hyperplane of the section contains the vertex quadric");
    Point13 witness;
    for (int k = 0; k < 14; ++k)
        witness[k] = ker[0][0] * sec.c[0][k] + ker[0][1] * sec.c[1][k] + ker[0][2] * sec.c[2][k];
    witness = canonical_scale(witness);

    LinSubspace plane = intersect(Q.span, sec.p10);
    if (plane.dim() != 3) {
        std::ostringstream os;
        os << "conic_on_X: the quadric meets the section in dimension " << plane.dim()
           << ", not a plane conic";
        throw std::runtime_error(os.str());
    }

    // restrict the 5x5 form to the plane's basis
    RatMat S(5, 3);
    for (int j = 0; j < 3; ++j) {
        auto coords = Q.span.coords_of(plane.basis().row((std::size_t)j));
        if (!coords) throw std::logic_error("conic_on_X: intersection escaped the span");
        for (std::size_t r = 0; r < 5; ++r) S(r, (std::size_t)j) = (*coords)[r];
    }
    Sym3<Rat> form;
    bool nonzero = false;
    for (int p = 0; p < 3; ++p)
        for (int q2 = p; q2 < 3; ++q2) {
            Rat acc(0);
            for (std::size_t r = 0; r < 5; ++r)
                for (std::size_t s = 0; s < 5; ++s)
                    acc += S(r, (std::size_t)p) * Q.form(r, s) * S(s, (std::size_t)q2);
            form.at(p, q2) = acc;
            if (acc != 0) nonzero = true;
        }
    if (!nonzero) throw std::runtime_error("conic_on_X: restricted form vanishes");
    return ConicOnX{x, witness, plane, form};
}

FanoSection section_through_line(const IsotropicLine& L, std::uint64_t seed) {
    SigmaLine line = line_from_axis(L);
    RatMat M(2, 14);
    for (int k = 0; k < 14; ++k) {
        M(0, (std::size_t)k) = Rat((long)kPairWeight[k]) * line.p0()[k];
        M(1, (std::size_t)k) = Rat((long)kPairWeight[k]) * line.p1()[k];
    }
    RatMat Mc = M;
    auto ker = kernel_of(Mc);
    if (ker.size() != 12)
        throw std::logic_error("section_through_line: annihilator has wrong dimension");

    Rng rng(seed);
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::array<Point13, 3> c;
        for (auto& ci : c) {
            for (int k = 0; k < 14; ++k) ci[k] = 0;
            for (const auto& b : ker) {
                Rat lam = Rat(rng.range(-5, 5));
                for (int k = 0; k < 14; ++k) ci[k] += lam * b[(std::size_t)k];
            }
        }
        FanoSection sec;
        try {
            sec = section_from_covectors(c, seed);
        } catch (const std::invalid_argument&) {
            continue;
        }
        DualQuartic q = dual_quartic(sec);
        if (q.degenerate || !q.smooth) continue;
        static const long pr[][2] = {{1, 0}, {0, 1}, {1, 1}, {2, -3}};
        for (auto& st : pr)
            if (!sec.annihilates(line.at(Rat(st[0]), Rat(st[1]))))
                throw std::logic_error("section_through_line: line escapes the section");
        sec.axis = L;
        return sec;
    }
    std::ostringstream os;
    os << "section_through_line: no smooth section in 256 draws from seed " << seed;
    throw std::runtime_error(os.str());
}

LineSectionReport c_l_section_check(const FanoSection& sec, const IsotropicLine& L,
                                    const CurveSample& cs) {
    (void)sec;
    PrecisionScope scope(cs.digits);
    const BigFloat tol = zero_threshold(cs.digits);
    LinSubspace p3 = alpha_perp(L.space());
    if (p3.dim() != 4)
        throw std::invalid_argument("c_l_section_check: axis perp is not 4-dimensional");

    LineSectionReport rep;
    rep.max_residual = BigFloat(0);
    for (std::size_t i = 0; i < cs.points.size(); ++i) {
        const CurvePoint& cp = cs.points[i];
        if (!cp.ok || !cp.has_conic) continue;
        LineSectionPoint pt;
        pt.index = i;

        // meet of the pivot plane with the 4-space of the axis: kernel of
        // the stacked column system [plane | -perp]
        NumMat M(6, 7);
        for (int r = 0; r < 6; ++r) {
            for (int c = 0; c < 3; ++c)
                M((std::size_t)r, (std::size_t)c) = cp.plane[(std::size_t)c][(std::size_t)r];
            for (int c = 0; c < 4; ++c)
                M((std::size_t)r, (std::size_t)(3 + c)) =
                    -CNum(p3.basis()((std::size_t)c, (std::size_t)r));
        }
        auto ker = num_kernel(M, cs.digits);
        pt.meet_ok = (ker.size() == 1);
        if (!pt.meet_ok) {
            ++rep.failures;
            rep.points.push_back(pt);
            continue;
        }
        NumVec a = {ker[0][0], ker[0][1], ker[0][2]};
        num_normalize(a);
        Mat<CNum> C = cp.conic.full();
        CNum val(0);
        for (int p = 0; p < 3; ++p)
            for (int q2 = 0; q2 < 3; ++q2)
                val += a[(std::size_t)p] * C((std::size_t)p, (std::size_t)q2) * a[(std::size_t)q2];
        pt.conic_value = val.abs();
        pt.pass = pt.conic_value < 10000 * tol;
        if (!pt.pass) ++rep.failures;
        if (pt.conic_value > rep.max_residual) rep.max_residual = pt.conic_value;
        rep.points.push_back(pt);
    }
    if (rep.points.empty()) ++rep.failures;
    return rep;
}

}  // namespace lg3
