// SPDX-License-Identifier: Apache-2.0

#include "capplan/schedule.hpp"

#include <unordered_set>

namespace capplan {

void RecurringEvent::validate() const {
    detail::require(amount.finite() && amount >= Money{0.0},
                    "event \"" + label + "\": amount must be finite and non-negative");
    detail::require(offset_years >= 0, "event \"" + label + "\": offset must be non-negative");
    detail::require(period_years >= 1, "event \"" + label + "\": period must be at least one year");
}

void Model::validate() const {
    horizon.validate();
    detail::require(opening_balance.finite(), "opening balance must be finite");
    detail::require(inflation > -1.0, "inflation must exceed -100%");
    detail::require(safety_balance.finite() && safety_balance >= Money{0.0},
                    "safety balance must be finite and non-negative");
    detail::require(income_central.finite() && income_central >= Money{0.0},
                    "central income must be finite and non-negative");
    detail::require(income_low_mult <= 1.0 && 1.0 <= income_high_mult,
                    "income multipliers must satisfy low <= 1 <= high");

    std::unordered_set<std::string> names;
    for (const auto& asset : assets) {
        detail::require(!asset.name.empty(), "asset names must be non-empty");
        detail::require(names.insert(asset.name).second,
                        "duplicate asset name \"" + asset.name + "\"");
        detail::require(asset.market_value.finite() && asset.market_value >= Money{0.0},
                        "asset \"" + asset.name + "\": market value must be non-negative");
        for (const auto& event : asset.events)
            event.validate();
    }
    for (const auto& oneoff : oneoffs) {
        detail::require(oneoff.amount.finite() && oneoff.amount >= Money{0.0},
                        "one-off \"" + oneoff.label + "\": amount must be non-negative");
        detail::require(horizon.contains(oneoff.year),
                        "one-off \"" + oneoff.label + "\": year lies outside the horizon");
    }
    for (const auto& option : options) {
        detail::require(option.amount.finite() && option.amount >= Money{0.0},
                        "option \"" + option.name + "\": amount must be non-negative");
        detail::require(horizon.contains(option.year),
                        "option \"" + option.name + "\": year lies outside the horizon");
    }
}

std::vector<std::pair<Year, Money>> expand_event(const RecurringEvent& event,
                                                 const Horizon& horizon) {
    event.validate();
    horizon.validate();

    std::vector<std::pair<Year, Money>> occurrences;
    // long long guards against offset/period values near INT_MAX.
    for (long long y = static_cast<long long>(horizon.start) + event.offset_years;
         y <= horizon.end; y += event.period_years)
        occurrences.emplace_back(static_cast<Year>(y), event.amount);
    return occurrences;
}

std::vector<Money> yearly_flows(const Model& model) {
    model.validate();

    std::vector<Money> flows(static_cast<std::size_t>(model.horizon.length()));
    for (const auto& asset : model.assets)
        for (const auto& event : asset.events)
            for (const auto& [year, amount] : expand_event(event, model.horizon))
                flows[static_cast<std::size_t>(model.horizon.index_of(year))] += amount;

    for (const auto& oneoff : model.oneoffs)
        flows[static_cast<std::size_t>(model.horizon.index_of(oneoff.year))] += oneoff.amount;

    for (const auto& option : model.options)
        if (option.enabled)
            flows[static_cast<std::size_t>(model.horizon.index_of(option.year))] += option.amount;

    return flows;
}

}  // namespace capplan
