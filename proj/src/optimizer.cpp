#include "streetlink/optimizer.hpp"

#include "streetlink/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <thread>

namespace streetlink {

using nlohmann::json;

namespace {

void require_keys(const json& j, std::initializer_list<const char*> allowed,
                  const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* k) { return it.key() == k; }) == allowed.end())
            throw ConfigError("unknown search key: " + where + it.key());
    }
}

std::string csv_field(const json& v) {
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_boolean())
        return v.get<bool>() ? "true" : "false";
    if (v.is_number()) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.9g", v.get<double>());
        return buf;
    }
    return v.dump();
}

} // namespace

SearchSpec search_spec_from_json(const json& j) {
    if (!j.is_object())
        throw ConfigError("search spec must be an object");
    require_keys(j, {"axes", "objective", "constraints", "report_metrics", "budget"}, "");

    SearchSpec spec;
    if (!j.contains("axes") || !j.at("axes").is_array())
        throw ConfigError("search spec needs an axes array");
    for (const json& ja : j.at("axes")) {
        require_keys(ja, {"key", "values"}, "axes.");
        SearchAxis axis;
        axis.key = ja.at("key").get<std::string>();
        if (!ja.contains("values") || !ja.at("values").is_array() || ja.at("values").empty())
            throw ConfigError("axis " + axis.key + " needs a non-empty values array");
        for (const json& v : ja.at("values"))
            axis.values.push_back(v);
        spec.axes.push_back(std::move(axis));
    }

    if (!j.contains("objective"))
        throw ConfigError("search spec needs an objective");
    const json& jo = j.at("objective");
    require_keys(jo, {"metric", "denominator"}, "objective.");
    spec.objective = metric_from_name(jo.at("metric").get<std::string>());
    if (jo.contains("denominator")) {
        spec.denominator = jo.at("denominator").get<std::string>();
        if (spec.denominator != "full" && spec.denominator != "admissible")
            throw ConfigError("objective.denominator must be full or admissible");
    }

    if (j.contains("constraints")) {
        for (const json& jc : j.at("constraints")) {
            require_keys(jc, {"metric", "min_coverage_pct"}, "constraints.");
            SearchConstraint c;
            c.metric = metric_from_name(jc.at("metric").get<std::string>());
            c.min_coverage_pct = jc.at("min_coverage_pct").get<double>();
            spec.constraints.push_back(c);
        }
    }
    if (j.contains("report_metrics"))
        for (const json& jm : j.at("report_metrics"))
            spec.report_metrics.push_back(metric_from_name(jm.get<std::string>()));
    if (j.contains("budget"))
        spec.budget = j.at("budget").get<long long>();
    return spec;
}

SearchSpec search_spec_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good())
        throw IoError("cannot read search spec: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("search spec " + path + ": " + e.what());
    }
    return search_spec_from_json(j);
}

long long grid_size(const SearchSpec& spec) {
    long long n = 1;
    for (const SearchAxis& axis : spec.axes) {
        const long long s = static_cast<long long>(axis.values.size());
        if (n > (1LL << 62) / s)
            throw BudgetExceeded("search grid does not fit in 63 bits");
        n *= s;
    }
    return n;
}

std::vector<json> point_values(const SearchSpec& spec, long long index) {
    std::vector<json> values(spec.axes.size());
    for (size_t i = spec.axes.size(); i-- > 0;) {
        const long long s = static_cast<long long>(spec.axes[i].values.size());
        values[i] = spec.axes[i].values[static_cast<size_t>(index % s)];
        index /= s;
    }
    return values;
}

Scenario apply_point(const Scenario& base, const SearchSpec& spec,
                     const std::vector<json>& values) {
    Scenario sc = base;
    for (size_t i = 0; i < spec.axes.size(); ++i)
        sc.set_path(spec.axes[i].key, values[i].dump());
    if (!spec.denominator.empty())
        sc.coverage.denominator = spec.denominator;
    return sc;
}

namespace {

// objective first, then constraints, then report metrics, deduplicated;
// slots map each consumer back into the shared metric list
struct MetricPlan {
    std::vector<Metric> metrics;
    size_t objective_slot = 0;
    std::vector<size_t> constraint_slots;
    std::vector<size_t> report_slots;
};

MetricPlan plan_metrics(const SearchSpec& spec) {
    MetricPlan plan;
    auto slot = [&](Metric m) {
        for (size_t i = 0; i < plan.metrics.size(); ++i)
            if (plan.metrics[i] == m)
                return i;
        plan.metrics.push_back(m);
        return plan.metrics.size() - 1;
    };
    plan.objective_slot = slot(spec.objective);
    for (const SearchConstraint& c : spec.constraints)
        plan.constraint_slots.push_back(slot(c.metric));
    for (Metric m : spec.report_metrics)
        plan.report_slots.push_back(slot(m));
    return plan;
}

bool better(const EvaluatedPoint& candidate, const EvaluatedPoint& incumbent) {
    return incumbent.index < 0 || candidate.objective_pct > incumbent.objective_pct;
}

} // namespace

SearchResult grid_search(const Scenario& base, const SearchSpec& spec, int threads) {
    const long long n = grid_size(spec);
    if (n > spec.budget)
        throw BudgetExceeded("search grid has " + std::to_string(n) +
                             " points, budget allows " + std::to_string(spec.budget));

    const MetricPlan plan = plan_metrics(spec);
    SearchResult result;
    result.trace.resize(static_cast<size_t>(n));

    auto eval_point = [&](long long idx) {
        EvaluatedPoint p;
        p.index = idx;
        p.values = point_values(spec, idx);
        const Scenario sc = apply_point(base, spec, p.values);
        const auto maps = compute_maps(sc, plan.metrics, 1);

        std::vector<double> pct(plan.metrics.size());
        for (size_t i = 0; i < maps.size(); ++i)
            pct[i] = coverage_stats(maps[i], sc).percent;

        p.objective_pct = pct[plan.objective_slot];
        for (size_t i = 0; i < plan.constraint_slots.size(); ++i) {
            p.constraint_pct.push_back(pct[plan.constraint_slots[i]]);
            if (p.constraint_pct.back() < spec.constraints[i].min_coverage_pct)
                p.feasible = false;
        }
        for (size_t slot : plan.report_slots)
            p.report_pct.push_back(pct[slot]);
        result.trace[static_cast<size_t>(idx)] = std::move(p);
    };

    int n_threads = threads;
    if (n_threads <= 0)
        n_threads = std::max(1u, std::thread::hardware_concurrency());
    n_threads = static_cast<int>(std::min<long long>(n_threads, n));

    if (n_threads <= 1) {
        for (long long idx = 0; idx < n; ++idx)
            eval_point(idx);
    } else {
        std::mutex fail_mutex;
        std::exception_ptr failure;
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (long long idx = t; idx < n; idx += n_threads)
                        eval_point(idx);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(fail_mutex);
                    if (!failure)
                        failure = std::current_exception();
                }
            });
        for (auto& th : pool)
            th.join();
        if (failure)
            std::rethrow_exception(failure);
    }

    result.evaluated = n;
    for (const EvaluatedPoint& p : result.trace) {
        if (better(p, result.best_unconstrained))
            result.best_unconstrained = p;
        if (p.feasible && (!result.feasible || better(p, result.best))) {
            result.best = p;
            result.feasible = true;
        }
    }
    if (!result.feasible)
        result.best = result.best_unconstrained;
    return result;
}

SearchSpec refine_spec(const SearchSpec& spec, const EvaluatedPoint& best, double shrink) {
    SearchSpec next = spec;
    for (size_t i = 0; i < spec.axes.size(); ++i) {
        const SearchAxis& axis = spec.axes[i];
        const json& winner = best.values.at(i);
        const bool numeric = std::all_of(axis.values.begin(), axis.values.end(),
                                         [](const json& v) { return v.is_number(); });
        if (!numeric || axis.values.size() < 2) {
            next.axes[i].values = {winner};
            continue;
        }
        double lo = axis.values.front().get<double>();
        double hi = lo;
        for (const json& v : axis.values) {
            lo = std::min(lo, v.get<double>());
            hi = std::max(hi, v.get<double>());
        }
        const double step = (hi - lo) / static_cast<double>(axis.values.size() - 1);
        const double center = winner.get<double>();
        const double d = step * shrink;
        std::vector<json> values;
        for (double v : {center - d, center, center + d}) {
            v = std::clamp(v, lo, hi);
            if (values.empty() || values.back().get<double>() != v)
                values.push_back(v);
        }
        next.axes[i].values = std::move(values);
    }
    return next;
}

std::vector<EvaluatedPoint> tradeoff_front(const SearchResult& result) {
    std::vector<EvaluatedPoint> front;
    for (const EvaluatedPoint& p : result.trace) {
        if (p.report_pct.size() != 2)
            throw ConfigError("tradeoff front needs exactly two report metrics");
        bool dominated = false;
        for (const EvaluatedPoint& q : result.trace) {
            if (q.index == p.index)
                continue;
            const bool geq = q.report_pct[0] >= p.report_pct[0] &&
                             q.report_pct[1] >= p.report_pct[1];
            const bool strict = q.report_pct[0] > p.report_pct[0] ||
                                q.report_pct[1] > p.report_pct[1];
            if (geq && strict) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            front.push_back(p);
    }
    std::sort(front.begin(), front.end(), [](const EvaluatedPoint& a, const EvaluatedPoint& b) {
        if (a.report_pct[0] != b.report_pct[0])
            return a.report_pct[0] > b.report_pct[0];
        if (a.report_pct[1] != b.report_pct[1])
            return a.report_pct[1] > b.report_pct[1];
        return a.index < b.index;
    });
    return front;
}

void write_trace_csv(const SearchSpec& spec, const SearchResult& result, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f)
        throw IoError("cannot write trace file: " + path);
    std::fputs("config_index", f);
    for (const SearchAxis& axis : spec.axes)
        std::fprintf(f, ",%s", axis.key.c_str());
    std::fprintf(f, ",%s_pct", metric_name(spec.objective).c_str());
    for (const SearchConstraint& c : spec.constraints)
        std::fprintf(f, ",%s_pct", metric_name(c.metric).c_str());
    std::fputc('\n', f);

    for (const EvaluatedPoint& p : result.trace) {
        std::fprintf(f, "%lld", p.index);
        for (const json& v : p.values)
            std::fprintf(f, ",%s", csv_field(v).c_str());
        std::fprintf(f, ",%.9g", p.objective_pct);
        for (double c : p.constraint_pct)
            std::fprintf(f, ",%.9g", c);
        std::fputc('\n', f);
    }
    if (std::fclose(f) != 0)
        throw IoError("failed to finish writing: " + path);
}

json search_result_to_json(const SearchSpec& spec, const SearchResult& result) {
    auto point_json = [&](const EvaluatedPoint& p) {
        json values = json::object();
        for (size_t i = 0; i < spec.axes.size(); ++i)
            values[spec.axes[i].key] = p.values.at(i);
        json constraints = json::array();
        for (size_t i = 0; i < spec.constraints.size(); ++i)
            constraints.push_back({{"metric", metric_name(spec.constraints[i].metric)},
                                   {"min_coverage_pct", spec.constraints[i].min_coverage_pct},
                                   {"coverage_pct", p.constraint_pct.at(i)}});
        json reports = json::array();
        for (size_t i = 0; i < spec.report_metrics.size(); ++i)
            reports.push_back({{"metric", metric_name(spec.report_metrics[i])},
                               {"coverage_pct", p.report_pct.at(i)}});
        return json{{"config_index", p.index}, {"values", values},
                    {"objective_pct", p.objective_pct}, {"constraints", constraints},
                    {"report_metrics", reports}, {"feasible", p.feasible}};
    };

    json j;
    j["objective"] = metric_name(spec.objective);
    j["evaluated"] = result.evaluated;
    j["feasible"] = result.feasible;
    j["best"] = point_json(result.best);
    if (!result.feasible)
        j["best_unconstrained"] = point_json(result.best_unconstrained);
    return j;
}

} // namespace streetlink
