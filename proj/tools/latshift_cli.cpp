// latshift command line: exact lattice-count statistics for integer
// polygons. Every subcommand is pure input -> output; exact values are
// printed as fraction strings, decimals appear only in series output.

#include "latshift/latshift.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace latshift;

Json moment_json(const IntPolygon& p) {
    auto rep = moment_report(p);
    Json contributions = Json::array();
    for (const auto& [dir, contrib] : rep.contributions) {
        contributions.push_back(Json{{"direction", {to_i64(dir.x), to_i64(dir.y)}},
                                     {"value", rat_str(contrib)}});
    }
    Json lengths = Json::array();
    for (const auto& s : p.sides()) lengths.push_back(to_i64(affine_length(s)));
    return Json{{"area", rat_str(p.area())},
                {"interior", to_i64(p.interior_count())},
                {"boundary", to_i64(p.boundary_count())},
                {"affine_lengths", lengths},
                {"expectation", rat_str(rep.expectation)},
                {"variance", rat_str(rep.variance)},
                {"variance_contributions", contributions},
                {"support_bound", support_bound(p)},
                {"vertices", polygon_to_json(p)["vertices"]}};
}

int cmd_analyze(const std::string& path) {
    std::cout << moment_json(load_polygon(path)).dump(2) << "\n";
    return 0;
}

int cmd_distribution(const std::string& path, const std::string& method,
                     std::uint64_t samples, std::uint64_t seed, unsigned shards,
                     const std::string& format) {
    auto p = load_polygon(path);
    if (method == "exact" || method == "triangle") {
        // both emit the bare law, so the two routes are byte-comparable
        Pmf law = (method == "exact") ? exact_pmf(p) : triangle_pmf(p);
        if (format == "csv") {
            std::cout << "value,probability\n";
            for (const auto& [v, q] : law.entries()) {
                std::cout << v << "," << rat_str(q) << "\n";
            }
        } else {
            std::cout << pmf_to_json(law).dump(2) << "\n";
        }
        return 0;
    }
    auto rep = simulate(p, SimConfig{samples, seed, shards});
    if (format == "csv") {
        std::cout << "value,count\n";
        for (const auto& [v, c] : rep.tallies) std::cout << v << "," << c << "\n";
        return 0;
    }
    Json out = report_to_json(rep);
    Pmf law = exact_pmf(p);
    out["exact"] = pmf_to_json(law);
    out["comparison"] = comparison_to_json(compare_to_exact(rep, law));
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_covariance(const std::string& path_p, const std::string& path_q,
                   const std::string& method, long radius) {
    auto p = load_polygon(path_p);
    auto q = load_polygon(path_q);
    Json out{{"method", method}};
    if (method == "theorem") {
        out["value"] = rat_str(covariance(p, q));
    } else if (method == "covariogram") {
        auto s = lattice_sum(p, q);
        out["value"] = rat_str(s.covariance);
        out["lattice_sum"] = rat_str(s.lattice_sum);
        out["integral"] = rat_str(s.integral);
    } else {
        out["value_decimal"] = covariance_series(p, q, radius);
        out["radius"] = radius;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_simulate(const std::string& path, std::uint64_t samples, std::uint64_t seed,
                 unsigned shards, bool compare, const std::string& format) {
    auto p = load_polygon(path);
    auto rep = simulate(p, SimConfig{samples, seed, shards});
    if (format == "csv") {
        std::cout << "value,count\n";
        for (const auto& [v, c] : rep.tallies) std::cout << v << "," << c << "\n";
        return 0;
    }
    Json out = report_to_json(rep);
    if (compare) {
        Pmf law = exact_pmf(p);
        out["exact"] = pmf_to_json(law);
        out["comparison"] = comparison_to_json(compare_to_exact(rep, law));
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_spectral(const std::string& path_p, const std::string& path_q, unsigned moment,
                 const std::vector<long>& radii, const std::string& format) {
    auto p = load_polygon(path_p);
    const bool pair = !path_q.empty();
    auto q = pair ? load_polygon(path_q) : p;

    double exact;
    if (pair || moment == 2) {
        exact = rat_double(covariance(p, q));
    } else {
        exact = rat_double(exact_pmf(p).central_moment(moment));
    }

    struct Row {
        long radius;
        double partial;
        double error;
    };
    std::vector<Row> rows;
    for (long r : radii) {
        double partial = (pair || moment == 2) ? covariance_series(p, q, r)
                                               : central_moment_series(p, moment, r);
        rows.push_back({r, partial, std::abs(partial - exact)});
    }

    if (format == "json") {
        Json table = Json::array();
        for (const auto& row : rows) {
            table.push_back(Json{{"radius", row.radius},
                                 {"partial_sum", row.partial},
                                 {"abs_error", row.error}});
        }
        std::cout << Json{{"moment", moment}, {"exact", exact}, {"table", table}}.dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "R,partial_sum,abs_error\n";
    std::ostringstream line;
    line.precision(17);
    for (const auto& row : rows) {
        line.str("");
        line << row.radius << "," << row.partial << "," << row.error;
        std::cout << line.str() << "\n";
    }
    return 0;
}

int cmd_covariogram(const std::string& path_a, const std::string& path_b,
                    const std::string& format) {
    auto a = load_polygon(path_a);
    auto b = load_polygon(path_b);
    auto table = covariogram_table(a, b);
    if (format == "csv") {
        std::cout << "nx,ny,g\n";
        for (const auto& e : table) {
            std::cout << e.nx << "," << e.ny << "," << rat_str(e.value) << "\n";
        }
        return 0;
    }
    auto s = lattice_sum(a, b);
    Json translates = Json::array();
    for (const auto& e : table) {
        translates.push_back(Json::array({to_i64(e.nx), to_i64(e.ny), rat_str(e.value)}));
    }
    std::cout << Json{{"translates", translates},
                      {"lattice_sum", rat_str(s.lattice_sum)},
                      {"integral", rat_str(s.integral)},
                      {"covariance", rat_str(s.covariance)},
                      {"covariance_theorem", rat_str(covariance(a, b))}}
                     .dump(2)
              << "\n";
    return 0;
}

// One row of the selfcheck matrix: route agreements for one polygon.
struct CheckRow {
    std::string label;
    std::vector<std::pair<std::string, bool>> checks;

    bool all_ok() const {
        for (const auto& [name, ok] : checks) {
            if (!ok) return false;
        }
        return true;
    }
};

int cmd_selfcheck(std::size_t corpus_size, std::uint64_t seed, bool sabotage) {
    if (corpus_size == 0) {
        std::cout << "selfcheck: empty corpus, vacuous pass (warning)\n";
        return 0;
    }
    auto corpus = random_corpus(seed, corpus_size);
    std::vector<CheckRow> rows;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& p = corpus[i];
        CheckRow row;
        {
            std::ostringstream label;
            label << "P" << i << " (n=" << p.size() << ", per=" << p.boundary_count() << ")";
            row.label = label.str();
        }

        auto census = lattice_census(p);
        row.checks.emplace_back("pick", census.interior == p.interior_count() &&
                                            census.boundary == p.boundary_count());

        Pmf law = exact_pmf(p);
        if (sabotage && i == 0) {
            // deliberately corrupt the law: move half the lowest value's
            // probability mass one step up
            auto m = law.entries();
            auto lo = m.begin();
            Rat d = lo->second / 2;
            Rat rest = lo->second - d;
            std::int64_t v = lo->first;
            m[v + 1] += d;
            if (rest == 0) m.erase(v);
            else m[v] = rest;
            law = Pmf::from_map(m);
        }
        row.checks.emplace_back("mean=area", law.mean() == p.area());
        row.checks.emplace_back("var=theorem", law.variance() == variance(p));
        row.checks.emplace_back("support", Int(law.support_size()) <= p.boundary_count() - 1 &&
                                               law.support_arithmetic(to_i64(support_step(p))));
        row.checks.emplace_back("symmetric", law.symmetric_about_mean());

        if (p.size() == 3) {
            row.checks.emplace_back("triangle-law", law == triangle_pmf(p));
        }

        // pointwise: side formula vs direct enumeration at clean shifts
        auto plan = CountPlan::make(p);
        bool pointwise = true;
        for (std::uint64_t j = 0; j < 32; ++j) {
            auto x = random_clean_shift(plan, seed ^ 0x9E37u, i * 64 + j);
            auto direct = count_shifted(p, x.to_rat());
            if (!direct.boundary_clean || direct.value != count_via_sides(plan, x)) {
                pointwise = false;
            }
        }
        row.checks.emplace_back("sides=direct", pointwise);

        // spectral closed form vs integration
        bool spectral_ok = true;
        for (long mx = -2; mx <= 2 && spectral_ok; ++mx) {
            for (long my = -2; my <= 2; ++my) {
                IntVec m(mx, my);
                auto closed = fourier_coeff(p, m).to_complex();
                if (std::abs(closed - fourier_quadrature(p, m)) > 1e-8) {
                    spectral_ok = false;
                    break;
                }
            }
        }
        row.checks.emplace_back("fourier", spectral_ok);

        // covariogram identity against the next polygon
        const auto& q = corpus[(i + 1) % corpus.size()];
        row.checks.emplace_back("covariogram",
                                lattice_sum(p, q).covariance == covariance(p, q));

        // lattice symmetries of the law
        auto m1 = random_unimodular(seed ^ 0xA5A5u, i, p, Int(24));
        row.checks.emplace_back("unimodular", exact_pmf(apply_unimodular(m1, p)) == law);
        row.checks.emplace_back("negation", exact_pmf(p.negated()) == law);

        rows.push_back(std::move(row));
    }

    bool all_ok = true;
    for (const auto& row : rows) {
        std::cout << (row.all_ok() ? "PASS " : "FAIL ") << row.label << " :";
        for (const auto& [name, ok] : row.checks) {
            std::cout << " " << name << (ok ? "+" : "!");
            if (!ok) all_ok = false;
        }
        std::cout << "\n";
    }
    std::cout << (all_ok ? "selfcheck: all identities hold\n"
                         : "selfcheck: FAILURES detected\n");
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice-count statistics for randomly shifted integer polygons"};
    app.require_subcommand(1);

    std::string path_p, path_q, dist_method = "exact", cov_method = "theorem";
    std::string format = "json", spectral_format = "csv";
    std::uint64_t samples = 1000000, seed = 1;
    unsigned shards = 1, moment = 2;
    long radius = 100;
    std::vector<long> radii{10, 50, 100, 200};
    bool no_compare = false, sabotage = false;
    std::size_t corpus_size = 25;

    auto* analyze = app.add_subcommand("analyze", "area, Pick counts, moments, support bound");
    analyze->add_option("polygon", path_p)->required();

    auto* dist = app.add_subcommand("distribution", "exact or simulated law of the count");
    dist->add_option("polygon", path_p)->required();
    dist->add_option("--method", dist_method)
        ->check(CLI::IsMember({"exact", "triangle", "montecarlo"}));
    dist->add_option("--samples", samples);
    dist->add_option("--seed", seed);
    dist->add_option("--shards", shards);
    dist->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* cov = app.add_subcommand("covariance", "covariance of two lattice counts");
    cov->add_option("P", path_p)->required();
    cov->add_option("Q", path_q)->required();
    cov->add_option("--method", cov_method)
        ->check(CLI::IsMember({"theorem", "covariogram", "series"}));
    cov->add_option("--radius", radius);

    auto* sim = app.add_subcommand("simulate", "seeded Monte Carlo with exact comparison");
    sim->add_option("polygon", path_p)->required();
    sim->add_option("--samples", samples);
    sim->add_option("--seed", seed);
    sim->add_option("--shards", shards);
    sim->add_flag("--no-compare", no_compare, "skip the exact-law comparison block");
    sim->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* spec = app.add_subcommand("spectral", "series convergence tables");
    spec->add_option("P", path_p)->required();
    spec->add_option("--with", path_q, "second polygon for a covariance series");
    spec->add_option("--moment", moment, "central moment order (single polygon)");
    spec->add_option("--radii", radii)->delimiter(',');
    spec->add_option("--format", spectral_format)->check(CLI::IsMember({"json", "csv"}));

    auto* covg = app.add_subcommand("covariogram", "per-translate overlap table");
    covg->add_option("A", path_p)->required();
    covg->add_option("B", path_q)->required();
    covg->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* self = app.add_subcommand("selfcheck", "route-agreement matrix on a random corpus");
    self->add_option("--corpus-size", corpus_size);
    self->add_option("--seed", seed);
    self->add_flag("--sabotage", sabotage, "corrupt one law to prove the checks can fail");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(path_p);
        if (dist->parsed()) {
            return cmd_distribution(path_p, dist_method, samples, seed, shards, format);
        }
        if (cov->parsed()) return cmd_covariance(path_p, path_q, cov_method, radius);
        if (sim->parsed()) {
            return cmd_simulate(path_p, samples, seed, shards, !no_compare, format);
        }
        if (spec->parsed()) return cmd_spectral(path_p, path_q, moment, radii, spectral_format);
        if (covg->parsed()) return cmd_covariogram(path_p, path_q, format);
        if (self->parsed()) return cmd_selfcheck(corpus_size, seed, sabotage);
    } catch (const latshift::Error& e) {
        std::cerr << latshift::error_to_json(e).dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return 1;
    }
    return 0;
}
