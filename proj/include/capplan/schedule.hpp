// SPDX-License-Identifier: Apache-2.0
//
// Asset maintenance/replacement schedules and their expansion into per-year
// expense flows. Occurrences that fall beyond the horizon end are silently
// dropped; the audit module reports on that truncation separately.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "capplan/money_time.hpp"

namespace capplan {

/// A periodic expense: first occurrence `offset_years` after the horizon
/// start, then every `period_years` thereafter.
struct RecurringEvent {
    std::string label;
    Money amount;             // base-year real, >= 0
    int offset_years = 0;     // >= 0
    int period_years = 1;     // >= 1

    void validate() const;
    bool operator==(const RecurringEvent&) const = default;
};

struct OneOffEvent {
    std::string label;
    Money amount;   // >= 0
    Year year;      // must lie within the model horizon

    bool operator==(const OneOffEvent&) const = default;
};

struct AssetSchedule {
    std::string name;                    // unique within a Model
    std::vector<RecurringEvent> events;
    Money market_value;                  // current fair market value, >= 0

    bool operator==(const AssetSchedule&) const = default;
};

/// Optional expenditure switched in or out by a flag.
struct OptionToggle {
    std::string name;
    Money amount;   // >= 0
    Year year;
    bool enabled = false;

    bool operator==(const OptionToggle&) const = default;
};

/// The complete scenario description: horizon, balances, rates and the full
/// expenditure schedule.
struct Model {
    Horizon horizon;
    Money opening_balance;
    Rate inflation = 0.0;
    Money safety_balance;        // base-year real, >= 0
    Money income_central;        // per annum, base-year real
    double income_low_mult = 0.5;
    double income_high_mult = 1.5;
    std::vector<AssetSchedule> assets;
    std::vector<OneOffEvent> oneoffs;
    std::vector<OptionToggle> options;

    void validate() const;
    bool operator==(const Model&) const = default;
};

/// Occurrence years of `event` within `horizon`, each paired with the event
/// amount, sorted ascending. An empty result is valid.
std::vector<std::pair<Year, Money>> expand_event(const RecurringEvent& event,
                                                 const Horizon& horizon);

/// Total expense per horizon year (base-year real), indexed by year offset
/// from the horizon start. Every year is present; quiet years carry 0.
/// Disabled options contribute nothing.
std::vector<Money> yearly_flows(const Model& model);

}  // namespace capplan
