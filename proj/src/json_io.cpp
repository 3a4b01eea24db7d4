#include "lg3/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace lg3 {

namespace {

/// Every malformed input funnels into invalid_argument so the CLI can map
/// it to the input-error exit code uniformly.
[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

Json expect(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Json rat_json(const Rat& r) { return rat_str(r); }

Rat rat_from(const Json& j) {
    if (j.is_number_integer()) return Rat((long)j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    bad("rational must be a string \"p/q\" or an integer");
}

Json vec6_json(const Vec6<Rat>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rat_json(x));
    return a;
}

Vec6<Rat> vec6_from(const Json& j) {
    if (!j.is_array() || j.size() != 6) bad("vector must be an array of 6 rationals");
    Vec6<Rat> v;
    for (int i = 0; i < 6; ++i) v[(std::size_t)i] = rat_from(j[(std::size_t)i]);
    return v;
}

Json point13_json(const Point13& p) {
    Json jx = Json::array(), jy = Json::array();
    for (int k = 0; k < 6; ++k) {
        jx.push_back(rat_json(p[SX11 + k]));
        jy.push_back(rat_json(p[SY11 + k]));
    }
    return Json{{"u", rat_json(p[SU])}, {"X", jx}, {"Y", jy}, {"z", rat_json(p[SZ])}};
}

Point13 point13_from(const Json& j) {
    Point13 p;
    p[SU] = rat_from(expect(j, "u"));
    p[SZ] = rat_from(expect(j, "z"));
    Json jx = expect(j, "X"), jy = expect(j, "Y");
    if (!jx.is_array() || jx.size() != 6 || !jy.is_array() || jy.size() != 6)
        bad("X and Y must be arrays of 6 rationals (upper triangle, row-major)");
    for (int k = 0; k < 6; ++k) {
        p[SX11 + k] = rat_from(jx[(std::size_t)k]);
        p[SY11 + k] = rat_from(jy[(std::size_t)k]);
    }
    return p;
}

Json sp3_json(const Sp3Element& g) {
    Json a = Json::array();
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) a.push_back(rat_json(g.mat()(i, j)));
    return a;
}

Sp3Element sp3_from(const Json& j) {
    if (!j.is_array() || j.size() != 36) bad("group element must be an array of 36 rationals");
    RatMat A(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t k = 0; k < 6; ++k) A(i, k) = rat_from(j[6 * i + k]);
    try {
        return Sp3Element(A);
    } catch (const std::exception& e) {
        bad(e.what());
    }
}

Json sigma_line_json(const SigmaLine& l) {
    Json axis = Json::array(), space = Json::array();
    for (std::size_t i = 0; i < 2; ++i) {
        Vec6<Rat> v;
        for (int k = 0; k < 6; ++k) v[(std::size_t)k] = l.axis().space().basis()(i, (std::size_t)k);
        axis.push_back(vec6_json(v));
    }
    for (std::size_t i = 0; i < 4; ++i) {
        Vec6<Rat> v;
        for (int k = 0; k < 6; ++k) v[(std::size_t)k] = l.space().basis()(i, (std::size_t)k);
        space.push_back(vec6_json(v));
    }
    return Json{{"axis", axis},
                {"space", space},
                {"span", Json::array({point13_json(l.p0()), point13_json(l.p1())})}};
}

SigmaLine sigma_line_from(const Json& j) {
    Json span = expect(j, "span");
    if (!span.is_array() || span.size() != 2) bad("line span must hold two points");
    SigmaLine l = [&]() -> SigmaLine {
        try {
            return SigmaLine(point13_from(span[0]), point13_from(span[1]));
        } catch (const std::exception& e) {
            bad(e.what());
        }
    }();
    if (j.contains("axis")) {
        Json axis = j.at("axis");
        if (!axis.is_array() || axis.size() != 2) bad("line axis must hold two vectors");
        std::vector<std::vector<Rat>> rows;
        for (const auto& row : axis) {
            auto v = vec6_from(row);
            rows.emplace_back(v.begin(), v.end());
        }
        if (!(LinSubspace::from_vectors(rows, 6) == l.axis().space()))
            bad("line axis does not match the span");
    }
    return l;
}

Json ternary_json(const TernaryForm& f) {
    Json coeffs = Json::object();
    for (std::size_t i = 0; i < f.terms(); ++i) {
        if (f[i] == 0) continue;
        auto e = f.exponents(i);
        std::ostringstream key;
        key << e[0] << "," << e[1] << "," << e[2];
        coeffs[key.str()] = rat_json(f[i]);
    }
    return Json{{"deg", f.degree()}, {"coeffs", coeffs}};
}

TernaryForm ternary_from(const Json& j) {
    Json jd = expect(j, "deg");
    if (!jd.is_number_unsigned() && !jd.is_number_integer()) bad("deg must be an integer");
    long d = jd.get<long>();
    if (d < 0 || d > 64) bad("deg out of range");
    TernaryForm f((unsigned)d);
    Json coeffs = expect(j, "coeffs");
    if (!coeffs.is_object()) bad("coeffs must be an object keyed by exponents");
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
        unsigned a = 0, b = 0, c = 0;
        char c1 = 0, c2 = 0;
        std::istringstream is(it.key());
        if (!(is >> a >> c1 >> b >> c2 >> c) || c1 != ',' || c2 != ',' || !(is >> std::ws).eof())
            bad("bad exponent key '" + it.key() + "'");
        if (a + b + c != (unsigned)d) bad("exponent key '" + it.key() + "' has wrong degree");
        f.at(a, b) = rat_from(it.value());
    }
    return f;
}

Json bigfloat_json(const BigFloat& x, unsigned digits10) {
    return Json{{"v", x.str(digits10)}, {"prec", digits10}};
}

Json section_json(const FanoSection& sec) {
    Json covs = Json::array();
    for (const auto& ci : sec.c) covs.push_back(point13_json(ci));
    Json out{{"seed", sec.seed}, {"covectors", covs}};
    if (sec.axis) {
        Json axis = Json::array();
        for (std::size_t i = 0; i < 2; ++i) {
            Vec6<Rat> v;
            for (int k = 0; k < 6; ++k)
                v[(std::size_t)k] = sec.axis->space().basis()(i, (std::size_t)k);
            axis.push_back(vec6_json(v));
        }
        out["axis"] = axis;
    }
    return out;
}

FanoSection section_from(const Json& j) {
    Json covs = expect(j, "covectors");
    if (!covs.is_array() || covs.size() != 3) bad("section needs 3 covectors");
    std::array<Point13, 3> c;
    for (int i = 0; i < 3; ++i) c[(std::size_t)i] = point13_from(covs[(std::size_t)i]);
    std::uint64_t seed = 0;
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer())
            bad("seed must be an integer");
        seed = j.at("seed").get<std::uint64_t>();
    }
    FanoSection sec = [&]() -> FanoSection {
        try {
            return section_from_covectors(c, seed);
        } catch (const std::exception& e) {
            bad(e.what());
        }
    }();
    if (j.contains("axis")) {
        Json axis = j.at("axis");
        if (!axis.is_array() || axis.size() != 2) bad("section axis must hold two vectors");
        std::vector<std::vector<Rat>> rows;
        for (const auto& row : axis) {
            auto v = vec6_from(row);
            rows.emplace_back(v.begin(), v.end());
        }
        try {
            sec.axis = IsotropicLine(LinSubspace::from_vectors(rows, 6));
        } catch (const std::exception& e) {
            bad(e.what());
        }
    }
    return sec;
}

Json dual_quartic_json(const DualQuartic& q) {
    return Json{{"form", ternary_json(q.form)},
                {"degenerate", q.degenerate},
                {"smooth", q.smooth},
                {"resultant", rat_json(q.resultant)}};
}

Json load_json(const std::string& file_or_dash) {
    try {
        if (file_or_dash == "-") return Json::parse(std::cin);
        std::ifstream in(file_or_dash);
        if (!in) bad("cannot open '" + file_or_dash + "'");
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        bad(std::string("bad JSON: ") + e.what());
    }
}

}  // namespace lg3
