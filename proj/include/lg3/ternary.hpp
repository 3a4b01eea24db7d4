#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lg3/matrix.hpp"

namespace lg3 {

/// Homogeneous form of degree d in three variables (s, t, w), dense rational
/// coefficients indexed by exponent triples in lex order (s-exponent
/// descending, then t-exponent descending).
class TernaryForm {
  public:
    TernaryForm() : deg_(0), coef_(1, Rat(0)) {}
    explicit TernaryForm(unsigned degree)
        : deg_(degree), coef_(count(degree), Rat(0)) {}

    [[nodiscard]] static std::size_t count(unsigned d) {
        return std::size_t(d + 1) * (d + 2) / 2;
    }

    [[nodiscard]] unsigned degree() const { return deg_; }
    [[nodiscard]] std::size_t terms() const { return coef_.size(); }

    /// Position of monomial s^a t^b w^c with a+b+c = degree.
    [[nodiscard]] std::size_t index(unsigned a, unsigned b) const {
        if (a + b > deg_) throw std::out_of_range("TernaryForm::index");
        // monomials with s-exponent > a come first
        std::size_t off = 0;
        for (unsigned i = deg_; i > a; --i) off += (deg_ - i) + 1;
        return off + (deg_ - a - b);
    }

    [[nodiscard]] std::array<unsigned, 3> exponents(std::size_t idx) const {
        for (unsigned a = deg_ + 1; a-- > 0;) {
            std::size_t n = (deg_ - a) + 1;
            if (idx < n) {
                unsigned b = deg_ - a - (unsigned)idx;
                return {a, b, deg_ - a - b};
            }
            idx -= n;
        }
        throw std::out_of_range("TernaryForm::exponents");
    }

    Rat& at(unsigned a, unsigned b) { return coef_[index(a, b)]; }
    const Rat& at(unsigned a, unsigned b) const { return coef_[index(a, b)]; }
    Rat& operator[](std::size_t i) { return coef_[i]; }
    const Rat& operator[](std::size_t i) const { return coef_[i]; }

    bool operator==(const TernaryForm& o) const {
        return deg_ == o.deg_ && coef_ == o.coef_;
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& c : coef_)
            if (c != 0) return false;
        return true;
    }

    /// Evaluate over any ring scalar constructible from Rat by T(Rat).
    template <class T>
    [[nodiscard]] T eval(const T& s, const T& t, const T& w) const {
        T acc(0);
        for (std::size_t i = 0; i < coef_.size(); ++i) {
            if (coef_[i] == 0) continue;
            auto [a, b, c] = exponents(i);
            T term(coef_[i]);
            for (unsigned k = 0; k < a; ++k) term = term * s;
            for (unsigned k = 0; k < b; ++k) term = term * t;
            for (unsigned k = 0; k < c; ++k) term = term * w;
            acc = acc + term;
        }
        return acc;
    }

    /// Partial derivative along variable 0, 1 or 2.
    [[nodiscard]] TernaryForm diff(unsigned var) const {
        if (deg_ == 0) return TernaryForm(0);
        TernaryForm r(deg_ - 1);
        for (std::size_t i = 0; i < coef_.size(); ++i) {
            if (coef_[i] == 0) continue;
            auto e = exponents(i);
            if (e[var] == 0) continue;
            std::array<unsigned, 3> f = e;
            f[var] -= 1;
            r.at(f[0], f[1]) += coef_[i] * Rat((long)e[var]);
        }
        return r;
    }

    [[nodiscard]] std::string str() const {
        std::string out;
        static const char* names[3] = {"s", "t", "w"};
        for (std::size_t i = 0; i < coef_.size(); ++i) {
            if (coef_[i] == 0) continue;
            std::string term;
            Rat c = coef_[i];
            auto e = exponents(i);
            bool unit = (c == 1 || c == -1) && (e[0] + e[1] + e[2]) > 0;
            if (!out.empty()) out += (c > 0) ? " + " : " - ";
            else if (c < 0) out += "-";
            Rat ac = abs(c);
            if (!unit) term += rat_str(ac);
            for (unsigned v = 0; v < 3; ++v) {
                if (e[v] == 0) continue;
                if (!term.empty()) term += "*";
                term += names[v];
                if (e[v] > 1) term += "^" + std::to_string(e[v]);
            }
            if (term.empty()) term = rat_str(ac);
            out += term;
        }
        return out.empty() ? "0" : out;
    }

  private:
    unsigned deg_;
    std::vector<Rat> coef_;
};

/// Deterministic interpolation nodes for a degree-d ternary form:
///   (i, 1, 0) for i = 0..d-1 and (1, 0, 0)  -- pin the w = 0 binary part,
///   (i, j, 1) for i + j <= d-1               -- principal lattice, poised.
/// The node count equals the coefficient count by construction.
[[nodiscard]] inline std::vector<std::array<Rat, 3>> interpolation_nodes(unsigned d) {
    std::vector<std::array<Rat, 3>> nodes;
    for (unsigned i = 0; i < d; ++i) nodes.push_back({Rat((long)i), Rat(1), Rat(0)});
    nodes.push_back({Rat(1), Rat(0), Rat(0)});
    if (d >= 1)
        for (unsigned i = 0; i <= d - 1; ++i)
            for (unsigned j = 0; i + j <= d - 1; ++j)
                nodes.push_back({Rat((long)i), Rat((long)j), Rat(1)});
    if (nodes.size() != TernaryForm::count(d))
        throw std::logic_error("interpolation_nodes: count mismatch");
    return nodes;
}

/// Interpolate the unique degree-d form matching `value` on the node set.
/// A singular evaluation matrix throws (it cannot occur for this node set;
/// the unit tests pin that for every degree used). The zero form comes back
/// as a TernaryForm with is_zero() == true, which is a valid result, not a
/// failure.
[[nodiscard]] inline TernaryForm interpolate_ternary_form(
    unsigned d, const std::function<Rat(const Rat&, const Rat&, const Rat&)>& value) {
    auto nodes = interpolation_nodes(d);
    std::size_t n = nodes.size();
    TernaryForm probe(d);
    RatMat A(n, n);
    std::vector<Rat> b(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            auto e = probe.exponents(c);
            Rat m(1);
            for (unsigned k = 0; k < e[0]; ++k) m *= nodes[r][0];
            for (unsigned k = 0; k < e[1]; ++k) m *= nodes[r][1];
            for (unsigned k = 0; k < e[2]; ++k) m *= nodes[r][2];
            A(r, c) = m;
        }
        b[r] = value(nodes[r][0], nodes[r][1], nodes[r][2]);
    }
    if (rank_of(A) != n)
        throw std::runtime_error("interpolate_ternary_form: singular node matrix");
    auto x = solve(A, b);
    TernaryForm f(d);
    for (std::size_t c = 0; c < n; ++c) f[c] = x[c];
    return f;
}

}  // namespace lg3
