#include "lg3/wedge.hpp"

#include "lg3/numlin.hpp"

#include <algorithm>

namespace lg3 {

namespace {

// sorted <- arbitrary index triple, with permutation sign (0 if repeated)
struct Sorted3 {
    std::array<int, 3> idx;
    int sign;
};
Sorted3 sort3(std::array<int, 3> t) {
    int s = 1;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2 - a; ++b)
            if (t[b] > t[b + 1]) {
                std::swap(t[b], t[b + 1]);
                s = -s;
            }
    if (t[0] == t[1] || t[1] == t[2]) return {t, 0};
    return {t, s};
}

// index dictionary of the X and Y blocks (1-based vector indices)
constexpr int kXIdx[3][3][3] = {
    {{4,2,3},{1,4,3},{1,2,4}},
    {{5,2,3},{1,5,3},{1,2,5}},
    {{6,2,3},{1,6,3},{1,2,6}}};
constexpr int kYIdx[3][3][3] = {
    {{1,5,6},{4,1,6},{4,5,1}},
    {{2,5,6},{4,2,6},{4,5,2}},
    {{3,5,6},{4,3,6},{4,5,3}}};

WedgeTables build_tables() {
    WedgeTables wt;
    int n = 0;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            for (int k = j + 1; k <= 6; ++k) wt.triples[n++] = {i, j, k};
    for (auto& row : wt.tidx)
        for (auto& col : row) std::fill(std::begin(col), std::end(col), -1);
    for (int t = 0; t < 20; ++t) {
        auto [i, j, k] = wt.triples[t];
        wt.tidx[i][j][k] = t;
    }
    n = 0;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            for (int k = j + 1; k <= 6; ++k)
                for (int l = k + 1; l <= 6; ++l) wt.quads[n++] = {i, j, k, l};

    auto add_term = [&](int slot, std::array<int, 3> ijk) {
        auto s3 = sort3(ijk);
        int idx = wt.tidx[s3.idx[0]][s3.idx[1]][s3.idx[2]];
        for (auto& [pidx, psign] : wt.slot_terms[slot])
            if (pidx == idx) return;  // symmetric partner hits the same basis vector
        wt.slot_terms[slot].push_back({idx, s3.sign});
    };
    add_term(SU, {1, 2, 3});
    add_term(SZ, {4, 5, 6});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            add_term(x_slot(i, j), {kXIdx[i][j][0], kXIdx[i][j][1], kXIdx[i][j][2]});
            add_term(y_slot(i, j), {kYIdx[i][j][0], kYIdx[i][j][1], kYIdx[i][j][2]});
        }
    for (int k = 0; k < 14; ++k) wt.slot_primary[k] = wt.slot_terms[k][0];
    return wt;
}

// startup check: the chart map through the full wedge reproduces
// (1 : X : adj X : det X) and lands on the slice, for a non-trivial sample.
bool self_test(const WedgeTables& wt) {
    SymMat3 X;
    X.at(0,0) = Rat(2); X.at(0,1) = Rat(-1); X.at(0,2) = Rat(3);
    X.at(1,1) = Rat(1, 2); X.at(1,2) = Rat(5); X.at(2,2) = Rat(-4, 3);
    Vec6<Rat> cols[3];
    for (int c = 0; c < 3; ++c) {
        cols[c].fill(Rat(0));
        cols[c][c] = Rat(1);
        for (int r = 0; r < 3; ++r) cols[c][3 + r] = X.at(r, c);
    }
    Wedge20<Rat> w = wedge3_of(cols[0], cols[1], cols[2]);
    if (slice_violation(w) != 0) return false;
    Point13 p = from_wedge_unchecked(w);
    Point13 q = exp_map(X);
    if (!(p == q)) return false;
    for (const auto& r : cramer_values(p))
        if (r != 0) return false;
    (void)wt;
    return true;
}

}  // namespace

int WedgeTables::qidx(const std::array<int, 4>& q) const {
    for (int i = 0; i < 15; ++i)
        if (quads[i] == q) return i;
    return -1;
}

const WedgeTables& wedge_tables() {
    static const WedgeTables wt = build_tables();
    return wt;
}

namespace {
// load-time guard: runs once after the tables exist, aborting loudly if the
// chart map and the dictionary ever disagree
const bool g_dictionary_checked = [] {
    if (!self_test(wedge_tables()))
        throw std::logic_error("wedge slice dictionary self-test failed");
    return true;
}();
}  // namespace

Point13 canonical_scale(const Point13& p) {
    for (int k = 0; k < 14; ++k)
        if (p[k] != 0) {
            Point13 q;
            Rat inv = 1 / p[k];
            for (int j = 0; j < 14; ++j) q[j] = p[j] * inv;
            return q;
        }
    return p;
}

Point13 exp_map(const SymMat3& X) {
    Point13 p;
    p.u() = Rat(1);
    p.setX(X);
    p.setY(adjugate(X));
    p.z() = det3(X);
    return p;
}

namespace {
template <class T, class AbsT>
AbsT slice_violation_impl(const Wedge20<T>& w, AbsT (*absf)(const T&)) {
    const auto& wt = wedge_tables();
    AbsT worst(0);
    // each off-diagonal slot has two wedge terms carrying the same value
    for (int k = 0; k < 14; ++k) {
        if (wt.slot_terms[k].size() < 2) continue;
        auto [i0, s0] = wt.slot_terms[k][0];
        auto [i1, s1] = wt.slot_terms[k][1];
        AbsT d = absf(T(s0) * w[i0] - T(s1) * w[i1]);
        if (d > worst) worst = d;
    }
    return worst;
}
Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }
BigFloat abs_cnum(const CNum& z) { return z.abs(); }
}  // namespace

Rat slice_violation(const Wedge20<Rat>& w) { return slice_violation_impl(w, abs_rat); }
BigFloat slice_violation(const Wedge20<CNum>& w) { return slice_violation_impl(w, abs_cnum); }

Rat sigma_residual(const Point13& p) {
    Point13 c = canonical_scale(p);
    Rat worst(0);
    for (const auto& v : cramer_values(c)) {
        Rat a = v < 0 ? Rat(-v) : v;
        if (a > worst) worst = a;
    }
    return worst;
}

bool is_on_sigma(const Point13& p) { return sigma_residual(p) == 0; }

BigFloat sigma_residual_num(const NumPoint13& p) {
    NumVec v(p.v.begin(), p.v.end());
    num_normalize(v);
    NumPoint13 q;
    std::copy(v.begin(), v.end(), q.v.begin());
    BigFloat worst(0);
    for (const auto& val : cramer_values(q)) {
        BigFloat a = val.abs();
        if (a > worst) worst = a;
    }
    return worst;
}

Point13 plucker(const std::array<Vec6<Rat>, 3>& plane) {
    RatMat M(3, 6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 6; ++j) M(i, j) = plane[i][j];
    if (rank_of(M) != 3) throw std::invalid_argument("plucker: spanning set not 3-dimensional");
    Wedge20<Rat> w = wedge3_of(plane[0], plane[1], plane[2]);
    if (slice_violation(w) != 0)
        throw std::invalid_argument("plucker: plane is not Lagrangian (off the symmetric slice)");
    return from_wedge_unchecked(w);
}

namespace {
// 15 x 6 matrix of v |-> w ^ v for fixed wedge-3 tensor w
template <class T>
Mat<T> wedge_against(const Wedge20<T>& w) {
    const auto& wt = wedge_tables();
    Mat<T> M(15, 6);
    for (int t = 0; t < 20; ++t) {
        if (w[t] == T(0)) continue;
        auto [i, j, k] = wt.triples[t];
        for (int l = 1; l <= 6; ++l) {
            if (l == i || l == j || l == k) continue;
            std::array<int, 4> q = {i, j, k, l};
            std::sort(q.begin(), q.end());
            int pos = int(std::find(q.begin(), q.end(), l) - q.begin());
            int sign = ((3 - pos) % 2 == 0) ? 1 : -1;
            M(wt.qidx(q), l - 1) += T(sign) * w[t];
        }
    }
    return M;
}
}  // namespace

std::array<Vec6<Rat>, 3> plane_of(const Point13& p) {
    auto M = wedge_against(to_wedge(p));
    auto ker = kernel_of(M);
    if (ker.size() != 3)
        throw std::invalid_argument("plane_of: point is not on the variety (kernel dim " +
                                    std::to_string(ker.size()) + ")");
    std::array<Vec6<Rat>, 3> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 6; ++j) out[i][j] = ker[i][j];
    return out;
}

std::array<Vec6<CNum>, 3> plane_of_num(const NumPoint13& p, unsigned digits10) {
    auto M = wedge_against(to_wedge(p));
    auto ker = num_kernel(M, digits10);
    if (ker.size() != 3)
        throw std::runtime_error("plane_of_num: numeric kernel dim " +
                                 std::to_string(ker.size()));
    std::array<Vec6<CNum>, 3> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 6; ++j) out[i][j] = ker[i][j];
    return out;
}

namespace {
template <class T>
Mat<T> rho_impl(const Mat<T>& g) {
    const auto& wt = wedge_tables();
    std::array<Vec6<T>, 6> col;
    for (int c = 0; c < 6; ++c)
        for (int r = 0; r < 6; ++r) col[c][r] = g(r, c);
    // images of the 20 wedge basis vectors
    std::array<Wedge20<T>, 20> img;
    for (int t = 0; t < 20; ++t) {
        auto [i, j, k] = wt.triples[t];
        img[t] = wedge3_of(col[i - 1], col[j - 1], col[k - 1]);
    }
    Mat<T> R(14, 14);
    for (int cslot = 0; cslot < 14; ++cslot) {
        Wedge20<T> acc;
        acc.fill(T(0));
        for (auto [idx, s] : wt.slot_terms[cslot])
            for (int t = 0; t < 20; ++t) acc[t] += T(s) * img[idx][t];
        Pt13<T> pi = from_wedge_unchecked(acc);
        for (int r = 0; r < 14; ++r) R(r, cslot) = pi[r];
    }
    return R;
}
}  // namespace

RatMat rho_wedge3(const RatMat& g) {
    const auto& wt = wedge_tables();
    std::array<Vec6<Rat>, 6> col;
    for (int c = 0; c < 6; ++c)
        for (int r = 0; r < 6; ++r) col[c][r] = g(r, c);
    RatMat R(14, 14);
    for (int cslot = 0; cslot < 14; ++cslot) {
        Wedge20<Rat> acc;
        acc.fill(Rat(0));
        for (auto [idx, s] : wt.slot_terms[cslot]) {
            auto [i, j, k] = wt.triples[idx];
            auto w = wedge3_of(col[i - 1], col[j - 1], col[k - 1]);
            for (int t = 0; t < 20; ++t) acc[t] += Rat(s) * w[t];
        }
        if (slice_violation(acc) != 0)
            throw std::invalid_argument("rho_wedge3: map does not preserve the slice");
        Pt13<Rat> pi = from_wedge_unchecked(acc);
        for (int r = 0; r < 14; ++r) R(r, cslot) = pi[r];
    }
    return R;
}

NumMat rho_wedge3_num(const Mat<CNum>& g) { return rho_impl(g); }

namespace {
template <class T, class Policy>
Mat<T> contragredient_impl(const Mat<T>& R, Policy pol) {
    Mat<T> Rt = R.transposed();
    Mat<T> Rti = inverse_of(Rt, pol);
    Mat<T> out(14, 14);
    for (int i = 0; i < 14; ++i)
        for (int j = 0; j < 14; ++j)
            out(i, j) = Rti(i, j) * T(kPairWeight[j]) / T(kPairWeight[i]);
    return out;
}
}  // namespace

RatMat contragredient14(const RatMat& R) {
    return contragredient_impl(R, ExactPivot<Rat>{});
}

NumMat contragredient14_num(const NumMat& R) {
    return contragredient_impl(R, num_policy_for(R, BigFloat::default_precision()));
}

}  // namespace lg3
