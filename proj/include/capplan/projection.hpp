// SPDX-License-Identifier: Apache-2.0
//
// The cash-flow engine: per-year real (base-year) balances, the inflated
// nominal row, the inflated safety row, and breach detection.

#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "capplan/schedule.hpp"

namespace capplan {

enum class ScenarioLabel { Low, Central, High };

constexpr std::string_view to_string(ScenarioLabel label) {
    switch (label) {
        case ScenarioLabel::Low: return "low";
        case ScenarioLabel::Central: return "central";
        default: return "high";
    }
}

struct IncomeScenario {
    ScenarioLabel label = ScenarioLabel::Central;
    Money annual_income;   // base-year real, constant across years

    bool operator==(const IncomeScenario&) const = default;
};

struct YearRecord {
    Year year;
    Money real_balance;     // base-year real
    Money nominal_balance;  // real_balance grown at the model inflation rate
    Money nominal_safety;   // safety balance grown by the same factor
    bool breach;            // real_balance < safety (equivalently on the nominal row)

    bool operator==(const YearRecord&) const = default;
};

struct ProjectionResult {
    IncomeScenario scenario;
    std::vector<YearRecord> years;
    std::optional<Year> first_breach_year;
};

/// Low / Central / High scenarios derived from the model's multipliers.
std::array<IncomeScenario, 3> scenario_set(const Model& model);

/// Runs the annual cash flow. Income and expense are both booked at the end
/// of every year, the first included; breach is tested on the post-booking
/// balance. Negative balances are carried, never clamped.
ProjectionResult project(const Model& model, const IncomeScenario& scenario,
                         std::optional<Money> opening_override = std::nullopt);

}  // namespace capplan
