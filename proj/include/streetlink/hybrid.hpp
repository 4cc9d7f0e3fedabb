#pragma once

// Link adaptation between the optical and array branches: per-point static
// selection used by the coverage maps, and stateful controllers that replay
// a metric trace the way a moving receiver would see it.

#include <string>
#include <vector>

namespace streetlink {

// power-domain sum of two quantities given in dB
double combined_db(double a_db, double b_db);

// hard selection with an optical preference: keep the optical branch while
// it clears the serve threshold, otherwise take the better branch
double gs_static_db(double vlc_db, double thz_db, double serve_db);

// selection combining with a fallback: the better branch alone, or both
// together when neither clears the upper threshold
double psc_static_db(double vlc_db, double thz_db, double high_db);

enum class ActiveLink { Vlc, Thz, Both };

enum class Policy { Switching, SoftSwitching, Selection, Combining };
Policy policy_from_name(const std::string& name); // gs | soft | psc | combining

struct Decision {
    ActiveLink active;
    double metric_db;
};

struct ControllerResult {
    std::vector<Decision> decisions;
    int switch_count = 0;
};

struct ControllerSettings {
    double low_db = 1.0;
    double high_db = 5.0;
    double smoothing = 0.5; // exponential factor for the soft variant
};

// replay a sequence of (optical, array) metric samples in dB
ControllerResult run_controller(Policy policy,
                                const std::vector<std::pair<double, double>>& samples_db,
                                const ControllerSettings& settings);

} // namespace streetlink
