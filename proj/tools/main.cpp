#include "CLI11.hpp"
#include "json.hpp"

#include "streetlink/coverage.hpp"
#include "streetlink/errors.hpp"
#include "streetlink/manifest.hpp"
#include "streetlink/optimizer.hpp"
#include "streetlink/ppm.hpp"
#include "streetlink/scenario.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace streetlink;
using nlohmann::json;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string preset;
    std::vector<std::string> sets;
    int threads = 0;       // 0 picks the hardware concurrency
    double grid_res = 0.0; // 0 keeps the configured resolution
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "scenario JSON file merged over the defaults");
    cmd->add_option("--preset", o.preset,
                    "named scenario from the STREETLINK_PRESETS directory, applied first");
    cmd->add_option("--set", o.sets, "dotted key=value override, repeatable, applied last");
    cmd->add_option("--threads", o.threads, "worker threads, 0 = all cores")
        ->envname("STREETLINK_THREADS");
    cmd->add_option("--grid-res", o.grid_res, "grid resolution in meters");
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good())
        throw IoError("cannot read file: " + path);
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

Scenario load_scenario(const CommonOpts& o) {
    Scenario sc;
    if (!o.preset.empty()) {
        const char* dir = std::getenv("STREETLINK_PRESETS");
        if (!dir || !*dir)
            throw ConfigError("--preset needs the STREETLINK_PRESETS directory");
        sc.merge_json(read_json_file(std::string(dir) + "/" + o.preset + ".json"));
    }
    if (!o.config_path.empty())
        sc.merge_json(read_json_file(o.config_path));
    for (const std::string& kv : o.sets) {
        const size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError("--set expects key=value, got: " + kv);
        sc.set_path(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (o.grid_res > 0.0)
        sc.coverage.grid_res_m = o.grid_res;
    sc.validate();
    return sc;
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create directory: " + dir + " (" + ec.message() + ")");
}

json stats_json(const CoverageStats& st) {
    return json{{"metric", metric_name(st.metric)},
                {"threshold", st.threshold},
                {"covered_above", st.covered_above},
                {"cells_total", st.cells_total},
                {"cells_covered", st.cells_covered},
                {"coverage_pct", st.percent},
                {"denominator", st.denominator}};
}

int cmd_coverage(const CommonOpts& common, const std::vector<std::string>& metric_names,
                 const std::string& denominator, const std::string& out_dir) {
    Scenario sc = load_scenario(common);
    if (!denominator.empty()) {
        if (denominator != "full" && denominator != "admissible")
            throw ConfigError("--denominator must be full or admissible");
        sc.coverage.denominator = denominator;
    }

    std::vector<Metric> metrics;
    if (metric_names.empty())
        metrics = all_metrics();
    else
        for (const std::string& name : metric_names)
            metrics.push_back(metric_from_name(name));

    const auto maps = compute_maps(sc, metrics, common.threads);
    ensure_dir(out_dir);

    std::vector<std::string> outputs;
    json summary;
    summary["grid"] = {{"nx", maps[0].nx}, {"ny", maps[0].ny}, {"res_m", maps[0].res_m}};
    summary["metrics"] = json::array();
    for (const GridMap& map : maps) {
        const std::string base = metric_name(map.metric);
        write_map_csv(map, out_dir + "/map_" + base + ".csv");
        write_map_ppm(map, out_dir + "/heatmap_" + base + ".ppm");
        outputs.push_back("map_" + base + ".csv");
        outputs.push_back("heatmap_" + base + ".ppm");
        summary["metrics"].push_back(stats_json(coverage_stats(map, sc)));
    }
    write_json_file(summary, out_dir + "/summary.json");
    outputs.push_back("summary.json");
    write_json_file(build_manifest("coverage", sc, outputs), out_dir + "/manifest.json");
    return 0;
}

int cmd_scenario_table(const CommonOpts& common, const std::string& rows_path,
                       const std::string& npsc_path, const std::string& out_path) {
    const json rows = read_json_file(rows_path);
    if (!rows.is_array())
        throw ConfigError("rows file must hold a JSON array");
    json npsc_overlay;
    if (!npsc_path.empty())
        npsc_overlay = read_json_file(npsc_path);

    std::string text = "visibility_km,background_power_w,vlc_pct,npsc_pct,gs_pct,psc_pct\n";
    for (const json& row : rows) {
        for (auto it = row.begin(); it != row.end(); ++it)
            if (it.key() != "visibility_km" && it.key() != "background_power_w")
                throw ConfigError("unknown row key: " + it.key());
        Scenario sc = load_scenario(common);
        if (row.contains("visibility_km"))
            sc.env.visibility_km = row.at("visibility_km").get<double>();
        if (row.contains("background_power_w"))
            sc.env.background_power_w = row.at("background_power_w").get<double>();

        const auto maps = compute_maps(sc, {Metric::SinrVlc, Metric::SicGs, Metric::SicPsc},
                                       common.threads);
        const double vlc = coverage_stats(maps[0], sc).percent;
        const double gs = coverage_stats(maps[1], sc).percent;
        const double psc = coverage_stats(maps[2], sc).percent;

        double npsc = psc;
        if (!npsc_overlay.is_null()) {
            Scenario alt = sc;
            alt.merge_json(npsc_overlay);
            GridMap map = compute_map(alt, Metric::SicPsc, common.threads);
            npsc = coverage_stats(map, alt).percent;
        }

        char line[160];
        std::snprintf(line, sizeof(line), "%.9g,%.9g,%.9g,%.9g,%.9g,%.9g\n",
                      sc.env.visibility_km, sc.env.background_power_w, vlc, npsc, gs, psc);
        text += line;
    }

    if (out_path.empty() || out_path == "-") {
        std::fputs(text.c_str(), stdout);
        return 0;
    }
    std::ofstream out(out_path);
    if (!out.good())
        throw IoError("cannot write table: " + out_path);
    out << text;
    return 0;
}

int cmd_optimize(const CommonOpts& common, const std::string& search_path,
                 const std::string& trace_path, long long budget, const std::string& out_dir) {
    Scenario base = load_scenario(common);
    SearchSpec spec = search_spec_from_file(search_path);
    if (budget > 0)
        spec.budget = budget;

    SearchResult result = grid_search(base, spec, common.threads);
    ensure_dir(out_dir);

    std::vector<std::string> outputs;
    write_json_file(search_result_to_json(spec, result), out_dir + "/result.json");
    outputs.push_back("result.json");
    // resolved winner, ready for `coverage --config best_config.json`
    const Scenario best = apply_point(base, spec, result.best.values);
    write_json_file(best.to_json(), out_dir + "/best_config.json");
    outputs.push_back("best_config.json");
    if (!trace_path.empty()) {
        write_trace_csv(spec, result, trace_path);
        outputs.push_back(trace_path);
    }
    write_json_file(build_manifest("optimize", base, outputs), out_dir + "/manifest.json");

    if (!result.feasible) {
        std::fprintf(stderr,
                     "no configuration met every constraint; best unconstrained point is "
                     "config_index %lld (%.9g%%)\n",
                     result.best_unconstrained.index, result.best_unconstrained.objective_pct);
        return 4;
    }
    return 0;
}

int cmd_validate(const CommonOpts& common) {
    Scenario sc = load_scenario(common);
    std::fputs((sc.to_json().dump(2) + "\n").c_str(), stdout);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hybrid optical/sub-THz street link simulator"};
    app.require_subcommand(1);

    CommonOpts cov_common;
    std::vector<std::string> cov_metrics;
    std::string cov_denominator;
    std::string cov_out_dir = ".";
    CLI::App* cov = app.add_subcommand("coverage", "compute metric maps and coverage statistics");
    add_common(cov, cov_common);
    cov->add_option("--metric", cov_metrics, "metric names to map, default: all");
    cov->add_option("--denominator", cov_denominator, "coverage counting rule: full|admissible");
    cov->add_option("--out-dir", cov_out_dir, "output directory");

    CommonOpts tab_common;
    std::string tab_rows, tab_npsc, tab_out = "-";
    CLI::App* tab = app.add_subcommand(
        "scenario-table", "coverage percentages across environment conditions, CSV");
    add_common(tab, tab_common);
    tab->add_option("--rows", tab_rows, "JSON array of {visibility_km, background_power_w}")
        ->required();
    tab->add_option("--npsc-config", tab_npsc,
                    "config overlay for the non-combining selection column");
    tab->add_option("--out", tab_out, "output CSV path, - for stdout");

    CommonOpts opt_common;
    std::string opt_search, opt_trace, opt_out_dir = ".";
    long long opt_budget = 0;
    CLI::App* opt = app.add_subcommand("optimize", "grid search over scenario parameters");
    add_common(opt, opt_common);
    opt->add_option("--search", opt_search, "search spec JSON")->required();
    opt->add_option("--trace", opt_trace, "write every evaluated point to this CSV");
    opt->add_option("--budget", opt_budget, "override the spec's evaluation budget");
    opt->add_option("--out-dir", opt_out_dir, "output directory");

    CommonOpts val_common;
    CLI::App* val = app.add_subcommand("validate", "check a configuration and print it resolved");
    add_common(val, val_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cov->parsed())
            return cmd_coverage(cov_common, cov_metrics, cov_denominator, cov_out_dir);
        if (tab->parsed())
            return cmd_scenario_table(tab_common, tab_rows, tab_npsc, tab_out);
        if (opt->parsed())
            return cmd_optimize(opt_common, opt_search, opt_trace, opt_budget, opt_out_dir);
        if (val->parsed())
            return cmd_validate(val_common);
    } catch (const BudgetExceeded& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
