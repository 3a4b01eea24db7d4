// Command-line front end: orbit classification, lemma suites, double
// projection, and the linear-section pipeline. All structured I/O is JSON;
// "-" means stdin. Exit codes: 0 ok, 2 a check failed, 3 bad input.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lg3/projection.hpp"
#include "lg3/report.hpp"

namespace {

using namespace lg3;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 2;
constexpr int kExitBadInput = 3;

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    out << j.dump(2) << "\n";
}

long elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return (long)std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

int cmd_classify(const std::string& in_path, const std::string& out_path) {
    Point13 p = point13_from(load_json(in_path));
    OrbitClass cls = classify_orbit(p);
    Json out{{"orbit", orbit_name(cls)},
             {"F", rat_json(F_eval(p))},
             {"grad_zero", F_grad(p).is_zero()}};
    emit(out, out_path);
    return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, long trials, unsigned prec,
               const std::string& out_path) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport rep = verify_suite(suite, seed, trials, prec);
    rep.wall_ms = elapsed_ms(t0);
    emit(report_json(rep), out_path);
    return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_project(const std::string& line_path, const std::string& point_path,
                const std::string& out_path) {
    SigmaLine line = sigma_line_from(load_json(line_path));
    Point13 p = point13_from(load_json(point_path));
    ProjectionData pd = projection_center(line);
    try {
        auto img = double_project(pd, p);
        Json coords = Json::array();
        for (const auto& c : img) coords.push_back(rat_json(c));
        emit(Json{{"image", coords}}, out_path);
        return kExitOk;
    } catch (const std::domain_error&) {
        emit(Json{{"error", "base_locus"}}, out_path);
        return kExitCheckFailed;
    }
}

int cmd_section_new(std::uint64_t seed, const std::string& axis_path,
                    const std::string& out_path) {
    FanoSection sec;
    if (axis_path.empty()) {
        sec = random_section(seed);
    } else {
        Json ja = load_json(axis_path);
        if (ja.contains("axis")) ja = ja.at("axis");
        if (!ja.is_array() || ja.size() != 2)
            throw std::invalid_argument("axis input must hold two 6-vectors");
        std::vector<std::vector<Rat>> rows;
        for (const auto& row : ja) {
            auto v = vec6_from(row);
            rows.emplace_back(v.begin(), v.end());
        }
        sec = section_through_line(IsotropicLine(LinSubspace::from_vectors(rows, 6)), seed);
    }
    emit(section_json(sec), out_path);
    return kExitOk;
}

int cmd_section_dual_quartic(const std::string& in_path, const std::string& out_path) {
    FanoSection sec = section_from(load_json(in_path));
    DualQuartic q = dual_quartic(sec);
    emit(dual_quartic_json(q), out_path);
    return q.degenerate ? kExitCheckFailed : kExitOk;
}

int cmd_section_verify(const std::string& in_path, std::uint64_t seed, bool have_seed,
                       const std::string& checks_csv, long points, unsigned prec,
                       const std::string& out_path) {
    auto t0 = std::chrono::steady_clock::now();
    FanoSection sec;
    if (!in_path.empty())
        sec = section_from(load_json(in_path));
    else if (have_seed)
        sec = random_section(seed);
    else
        throw std::invalid_argument("section verify needs an input file or --seed");

    std::vector<std::string> wanted;
    {
        std::istringstream is(checks_csv);
        std::string item;
        while (std::getline(is, item, ','))
            if (!item.empty()) wanted.push_back(item);
    }
    auto has = [&](const char* name) {
        if (wanted.empty()) return std::string(name) != "line-section" || sec.axis.has_value();
        for (const auto& w : wanted)
            if (w == name) return true;
        return false;
    };
    for (const auto& w : wanted)
        if (w != "pivots" && w != "fibration" && w != "line-section")
            throw std::invalid_argument("unknown check '" + w +
                                        "' (expected pivots, fibration, line-section)");
    if (has("line-section") && !sec.axis)
        throw std::invalid_argument("line-section check needs a section built through a line");

    RunReport rep;
    rep.command = "section verify";
    rep.seed = sec.seed;
    rep.precision = prec;

    DualQuartic q = dual_quartic(sec);
    rep.add("dual-quartic-smooth", q.smooth,
            q.degenerate ? "restriction vanishes identically" : "resultant " + rat_str(q.resultant));
    if (q.smooth) {
        auto params = sample_curve(q, (std::size_t)points, prec);
        CurveSample cs = pivot_curve(sec, params, prec);
        BigFloat tol = cs.tolerance();
        if (has("pivots")) {
            BigFloat worst(0);
            bool all_ok = true;
            for (const auto& cp : cs.points) {
                if (!cp.ok) all_ok = false;
                if (cp.pivot_residual > worst) worst = cp.pivot_residual;
            }
            rep.add("pivot-residuals", all_ok && worst < 10000 * tol,
                    "max " + worst.str(3) + " over " + std::to_string(cs.points.size()) + " points");
            rep.add("pivots-distinct", cs.pivots_distinct,
                    "min distance " + cs.min_pivot_distance.str(3));
        }
        if (has("fibration") || has("line-section")) vertex_surface(sec, cs);
        if (has("fibration")) {
            FibrationReport fr = fibration_check(cs);
            rep.add("fibration-disjoint-planes", fr.pass(),
                    std::to_string(fr.pairs) + " pairs, " + std::to_string(fr.failures) +
                        " failures");
        }
        if (has("line-section")) {
            LineSectionReport lr = c_l_section_check(sec, *sec.axis, cs);
            rep.add("line-section-property", lr.pass(),
                    std::to_string(lr.points.size()) + " points, max residual " +
                        lr.max_residual.str(3));
        }
    }
    rep.wall_ms = elapsed_ms(t0);
    emit(report_json(rep), out_path);
    return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and certified-numeric geometry of the lagrangian grassmannian LG(3,6)"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "write the JSON result here instead of stdout")
        ->capture_default_str();

    // classify
    auto* classify = app.add_subcommand("classify", "orbit of a point of P13 under Sp3");
    std::string classify_in = "-";
    classify->add_option("input", classify_in, "Point13 JSON file, - for stdin");

    // verify-lemmas
    auto* verify = app.add_subcommand("verify-lemmas", "run a module invariant suite");
    std::string suite = "core";
    std::uint64_t seed = 1;
    long trials = 100;
    unsigned prec = kDefaultDigits;
    verify->add_option("--suite", suite, "core, incidence, projection or section")
        ->capture_default_str();
    verify->add_option("--seed", seed, "random seed")->capture_default_str();
    verify->add_option("--trials", trials, "sampling effort")->capture_default_str();
    verify->add_option("--prec", prec, "working decimal digits")->capture_default_str();

    // project
    auto* project = app.add_subcommand("project", "double projection from a line of the variety");
    std::string line_path, point_path = "-";
    project->add_option("--line", line_path, "SigmaLine JSON file")->required();
    project->add_option("--point", point_path, "Point13 JSON file, - for stdin");

    // section + subcommands
    auto* section = app.add_subcommand("section", "linear sections X and their dual quartics");
    section->require_subcommand(1);
    auto* snew = section->add_subcommand("new", "draw a section (optionally through a line)");
    std::uint64_t ssn_seed = 1;
    std::string axis_path;
    snew->add_option("--seed", ssn_seed, "random seed")->capture_default_str();
    snew->add_option("--axis", axis_path, "JSON file with two spanning 6-vectors of an isotropic line");
    auto* sdq = section->add_subcommand("dual-quartic", "restriction of the invariant to the dual plane");
    std::string sdq_in = "-";
    sdq->add_option("input", sdq_in, "FanoSection JSON file, - for stdin");
    auto* sver = section->add_subcommand("verify", "numeric property checks on a section");
    std::string sver_in, checks_csv;
    std::uint64_t sver_seed = 0;
    long points = 20;
    unsigned sver_prec = kDefaultDigits;
    sver->add_option("input", sver_in, "FanoSection JSON file, - for stdin");
    auto* seed_opt = sver->add_option("--seed", sver_seed, "draw the section from this seed instead");
    sver->add_option("--checks", checks_csv, "comma list: pivots,fibration,line-section (default all applicable)");
    sver->add_option("--points", points, "curve sample size")->capture_default_str();
    sver->add_option("--prec", sver_prec, "working decimal digits")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*classify) return cmd_classify(classify_in, out_path);
        if (*verify) return cmd_verify(suite, seed, trials, prec, out_path);
        if (*project) return cmd_project(line_path, point_path, out_path);
        if (*snew) return cmd_section_new(ssn_seed, axis_path, out_path);
        if (*sdq) return cmd_section_dual_quartic(sdq_in, out_path);
        if (*sver)
            return cmd_section_verify(sver_in, sver_seed, seed_opt->count() > 0, checks_csv,
                                      points, sver_prec, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitBadInput;
}
