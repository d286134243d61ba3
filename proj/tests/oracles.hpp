// SPDX-License-Identifier: Apache-2.0
//
// Test-only helpers: independent oracles kept away from the library code
// paths they check, plus a generator for random integer-pound models.

#pragma once

#include <random>
#include <string>

#include "capplan/analysis.hpp"
#include "capplan/projection.hpp"
#include "capplan/schedule.hpp"

namespace testutil {

using namespace capplan;

/// The bundled demo model, built in code.
inline Model demo_model() {
    Model m;
    m.horizon = Horizon{2016, 2050};
    m.opening_balance = Money{110000.0};
    m.inflation = 0.02;
    m.safety_balance = Money{30000.0};
    m.income_central = Money{8000.0};
    m.assets = {AssetSchedule{"asset-one",
                              {RecurringEvent{"refurbish", Money{18000.0}, 4, 30},
                               RecurringEvent{"replace", Money{50000.0}, 24, 24}},
                              Money{150000.0}}};
    m.options = {OptionToggle{"new-asset", Money{40000.0}, 2016, false}};
    return m;
}

/// Compound factor by repeated multiplication; independent of std::pow.
inline double growth_factor_oracle(double rate, int years) {
    long double factor = 1.0L;
    for (int i = 0; i < years; ++i)
        factor *= 1.0L + static_cast<long double>(rate);
    return static_cast<double>(factor);
}

inline double total_expenses(const Model& m) {
    double total = 0.0;
    for (const Money flow : yearly_flows(m))
        total += flow.pounds();
    return total;
}

/// Bisection goal-seek on the opening balance. The bracket top
/// safety + total expenses can never breach, so the search is well posed.
inline double bisect_required_opening(const Model& m, const IncomeScenario& scenario,
                                      double tolerance = 1e-3) {
    const auto breaches = [&](double opening) {
        return project(m, scenario, Money{opening}).first_breach_year.has_value();
    };
    if (!breaches(0.0))
        return 0.0;
    double lo = 0.0;
    double hi = m.safety_balance.pounds() + total_expenses(m);
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        (breaches(mid) ? lo : hi) = mid;
    }
    return hi;
}

/// Random model with whole-pound amounts (keeps double sums exact). Event
/// offsets deliberately overshoot the horizon now and then so truncation
/// paths get exercised.
inline Model random_model(std::mt19937& rng) {
    const auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    Model m;
    const Year start = 2000 + pick(0, 40);
    m.horizon = Horizon{start, start + pick(0, 59)};
    m.opening_balance = Money{static_cast<double>(pick(0, 200) * 1000)};
    m.inflation = pick(-40, 60) / 1000.0;
    m.safety_balance = Money{static_cast<double>(pick(0, 60) * 1000)};
    m.income_central = Money{static_cast<double>(pick(0, 30) * 1000)};

    const int asset_count = pick(0, 10);
    for (int a = 0; a < asset_count; ++a) {
        AssetSchedule asset;
        asset.name = "asset-" + std::to_string(a);
        asset.market_value = Money{static_cast<double>(pick(0, 150) * 1000)};
        const int event_count = pick(0, 4);
        for (int e = 0; e < event_count; ++e)
            asset.events.push_back(RecurringEvent{"ev-" + std::to_string(e),
                                                  Money{static_cast<double>(pick(0, 100) * 1000)},
                                                  pick(0, m.horizon.length() + 10), pick(1, 40)});
        m.assets.push_back(std::move(asset));
    }
    const int oneoff_count = pick(0, 3);
    for (int i = 0; i < oneoff_count; ++i)
        m.oneoffs.push_back(OneOffEvent{"one-" + std::to_string(i),
                                        Money{static_cast<double>(pick(0, 50) * 1000)},
                                        start + pick(0, m.horizon.length() - 1)});
    const int option_count = pick(0, 2);
    for (int i = 0; i < option_count; ++i)
        m.options.push_back(OptionToggle{"opt-" + std::to_string(i),
                                         Money{static_cast<double>(pick(0, 60) * 1000)},
                                         start + pick(0, m.horizon.length() - 1), pick(0, 1) == 1});
    return m;
}

inline IncomeScenario random_scenario(std::mt19937& rng, const Model& m) {
    const auto scenarios = scenario_set(m);
    return scenarios[std::uniform_int_distribution<int>(0, 2)(rng)];
}

}  // namespace testutil
