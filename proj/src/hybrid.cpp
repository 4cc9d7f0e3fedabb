#include "streetlink/hybrid.hpp"

#include "streetlink/errors.hpp"
#include "streetlink/link_metrics.hpp"

#include <algorithm>

namespace streetlink {

double combined_db(double a_db, double b_db) {
    return to_db(from_db(a_db) + from_db(b_db));
}

double gs_static_db(double vlc_db, double thz_db, double serve_db) {
    if (vlc_db >= serve_db)
        return vlc_db;
    return std::max(vlc_db, thz_db);
}

double psc_static_db(double vlc_db, double thz_db, double high_db) {
    if (vlc_db < high_db && thz_db < high_db)
        return combined_db(vlc_db, thz_db);
    return std::max(vlc_db, thz_db);
}

Policy policy_from_name(const std::string& name) {
    if (name == "gs") return Policy::Switching;
    if (name == "soft") return Policy::SoftSwitching;
    if (name == "psc") return Policy::Selection;
    if (name == "combining") return Policy::Combining;
    throw ConfigError("unknown link policy: " + name + " (expected gs, soft, psc, or combining)");
}

namespace {

ActiveLink better_of(double vlc_db, double thz_db) {
    return vlc_db >= thz_db ? ActiveLink::Vlc : ActiveLink::Thz;
}

double metric_of(ActiveLink a, double vlc_db, double thz_db) {
    switch (a) {
    case ActiveLink::Vlc: return vlc_db;
    case ActiveLink::Thz: return thz_db;
    default: return combined_db(vlc_db, thz_db);
    }
}

// hard switching: hold the active branch while it clears the lower
// threshold, move only if the other one does
ActiveLink switch_step(ActiveLink state, double active_db, double other_db, double low_db) {
    if (active_db >= low_db)
        return state;
    if (other_db >= low_db)
        return state == ActiveLink::Vlc ? ActiveLink::Thz : ActiveLink::Vlc;
    return state;
}

// selection: hold above the high threshold, hand over if the other branch
// clears it, otherwise run both until one recovers
ActiveLink selection_step(ActiveLink state, double vlc_db, double thz_db,
                          const ControllerSettings& s) {
    if (state == ActiveLink::Both) {
        if (vlc_db >= s.high_db || thz_db >= s.high_db) {
            if (vlc_db >= s.high_db && thz_db >= s.high_db)
                return better_of(vlc_db, thz_db);
            return vlc_db >= s.high_db ? ActiveLink::Vlc : ActiveLink::Thz;
        }
        return ActiveLink::Both;
    }
    const double active = metric_of(state, vlc_db, thz_db);
    const double other = state == ActiveLink::Vlc ? thz_db : vlc_db;
    if (active >= s.low_db)
        return state; // healthy, or degraded but inside the hysteresis band
    if (other >= s.high_db)
        return state == ActiveLink::Vlc ? ActiveLink::Thz : ActiveLink::Vlc;
    return ActiveLink::Both;
}

} // namespace

ControllerResult run_controller(Policy policy,
                                const std::vector<std::pair<double, double>>& samples_db,
                                const ControllerSettings& settings) {
    ControllerResult result;
    result.decisions.reserve(samples_db.size());
    if (samples_db.empty())
        return result;

    ActiveLink state;
    switch (policy) {
    case Policy::Combining: state = ActiveLink::Both; break;
    case Policy::Selection: state = better_of(samples_db[0].first, samples_db[0].second); break;
    default: state = ActiveLink::Vlc; break;
    }

    double smooth_vlc = samples_db[0].first;
    double smooth_thz = samples_db[0].second;
    bool first = true;
    for (const auto& [vlc_db, thz_db] : samples_db) {
        smooth_vlc = first ? vlc_db : settings.smoothing * vlc_db + (1.0 - settings.smoothing) * smooth_vlc;
        smooth_thz = first ? thz_db : settings.smoothing * thz_db + (1.0 - settings.smoothing) * smooth_thz;

        ActiveLink next = state;
        switch (policy) {
        case Policy::Switching:
            next = switch_step(state, metric_of(state, vlc_db, thz_db),
                               state == ActiveLink::Vlc ? thz_db : vlc_db, settings.low_db);
            break;
        case Policy::SoftSwitching:
            next = switch_step(state, metric_of(state, smooth_vlc, smooth_thz),
                               state == ActiveLink::Vlc ? smooth_thz : smooth_vlc, settings.low_db);
            break;
        case Policy::Selection:
            next = selection_step(state, vlc_db, thz_db, settings);
            break;
        case Policy::Combining:
            next = ActiveLink::Both;
            break;
        }
        if (!first && next != state)
            ++result.switch_count;
        state = next;
        result.decisions.push_back({state, metric_of(state, vlc_db, thz_db)});
        first = false;
    }
    return result;
}

} // namespace streetlink
