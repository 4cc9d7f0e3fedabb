#pragma once

// Deterministic grid search over scenario parameters: each axis lists the
// values to try for one dotted config key, every combination is scored by
// map coverage, and the best point that satisfies all constraints wins.

#include "streetlink/coverage.hpp"
#include "streetlink/scenario.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace streetlink {

struct SearchAxis {
    std::string key;                   // dotted config path, e.g. vlc.mount.tilt_deg
    std::vector<nlohmann::json> values;
};

struct SearchConstraint {
    Metric metric;
    double min_coverage_pct = 0.0;
};

struct SearchSpec {
    std::vector<SearchAxis> axes;
    Metric objective = Metric::Lighting;
    std::string denominator;           // empty keeps the scenario's counting rule
    std::vector<SearchConstraint> constraints;
    std::vector<Metric> report_metrics; // extra columns, feed the tradeoff front
    long long budget = 1000000;        // refuse larger grids up front
};

SearchSpec search_spec_from_json(const nlohmann::json& j);
SearchSpec search_spec_from_file(const std::string& path);

long long grid_size(const SearchSpec& spec);

// reverse-odometer decode: the first axis varies slowest
std::vector<nlohmann::json> point_values(const SearchSpec& spec, long long index);

// base scenario with one grid point's overrides applied
Scenario apply_point(const Scenario& base, const SearchSpec& spec,
                     const std::vector<nlohmann::json>& values);

struct EvaluatedPoint {
    long long index = -1;
    std::vector<nlohmann::json> values;
    double objective_pct = 0.0;
    std::vector<double> constraint_pct;
    std::vector<double> report_pct;
    bool feasible = true;
};

struct SearchResult {
    bool feasible = false;        // did any point satisfy every constraint
    EvaluatedPoint best;          // best feasible point, or best overall if none
    EvaluatedPoint best_unconstrained;
    long long evaluated = 0;
    std::vector<EvaluatedPoint> trace; // every point in index order
};

// evaluates the full grid; ties go to the lowest index. threads <= 0 picks
// the hardware concurrency. Throws BudgetExceeded before any evaluation if
// the grid is larger than the budget.
SearchResult grid_search(const Scenario& base, const SearchSpec& spec, int threads = 1);

// next-round spec centered on a winner: numeric axes shrink to
// {v - step * shrink, v, v + step * shrink} clipped to the original bounds,
// other axes collapse to the winning value
SearchSpec refine_spec(const SearchSpec& spec, const EvaluatedPoint& best, double shrink = 0.5);

// rows that no other row beats on both report metrics, sorted by the first
// metric descending; needs exactly two report metrics
std::vector<EvaluatedPoint> tradeoff_front(const SearchResult& result);

// one row per grid point: config_index,<axis keys...>,objective,<constraints...>
void write_trace_csv(const SearchSpec& spec, const SearchResult& result, const std::string& path);

nlohmann::json search_result_to_json(const SearchSpec& spec, const SearchResult& result);

} // namespace streetlink
