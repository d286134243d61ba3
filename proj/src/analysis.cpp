// SPDX-License-Identifier: Apache-2.0

#include "capplan/analysis.hpp"

#include <algorithm>
#include <cstdlib>

namespace capplan {

namespace {

std::string perturbation_label(const char* field, int from, int to) {
    return std::string(field) + " " + std::to_string(from) + " -> " + std::to_string(to);
}

int occurrence_count(const RecurringEvent& event, const Horizon& horizon) {
    return static_cast<int>(expand_event(event, horizon).size());
}

}  // namespace

Money required_opening_real(const Model& model, const IncomeScenario& scenario) {
    model.validate();
    const std::vector<Money> flows = yearly_flows(model);

    Money cumulative{0.0};
    Money lowest{0.0};
    bool first = true;
    for (const Money expense : flows) {
        cumulative += scenario.annual_income - expense;
        if (first || cumulative < lowest) {
            lowest = cumulative;
            first = false;
        }
    }
    return std::max(Money{0.0}, model.safety_balance - lowest);
}

ShortfallReport peak_nominal_shortfall(const Model& model, const IncomeScenario& scenario,
                                       Money opening) {
    const ProjectionResult projection = project(model, scenario, opening);

    ShortfallReport report;
    report.scenario = scenario;
    report.per_year.reserve(projection.years.size());
    for (const YearRecord& record : projection.years) {
        const Money shortfall =
            std::max(Money{0.0}, record.nominal_safety - record.nominal_balance);
        report.per_year.emplace_back(record.year, shortfall);
        if (shortfall > report.peak) {  // strict: ties keep the earliest year
            report.peak = shortfall;
            report.binding_year = record.year;
        }
    }
    return report;
}

std::vector<EdgeEffect> edge_scan(const Model& model, const IncomeScenario& scenario,
                                  Money opening, int radius) {
    model.validate();
    detail::require(radius >= 1, "edge scan radius must be at least 1");

    const Money base_required = required_opening_real(model, scenario);
    const Money base_peak = peak_nominal_shortfall(model, scenario, opening).peak;

    std::vector<EdgeEffect> effects;
    for (std::size_t ai = 0; ai < model.assets.size(); ++ai) {
        for (std::size_t ei = 0; ei < model.assets[ai].events.size(); ++ei) {
            const RecurringEvent& base_event = model.assets[ai].events[ei];
            const int base_count = occurrence_count(base_event, model.horizon);

            struct Candidate {
                bool is_period;
                int value;
            };
            std::vector<Candidate> candidates;
            for (int step = 1; step <= radius; ++step) {
                candidates.push_back({true, base_event.period_years + step});
                if (base_event.period_years - step >= 1)
                    candidates.push_back({true, base_event.period_years - step});
                candidates.push_back({false, base_event.offset_years + step});
                if (base_event.offset_years - step >= 0)
                    candidates.push_back({false, base_event.offset_years - step});
            }

            for (const Candidate& candidate : candidates) {
                Model perturbed = model;
                RecurringEvent& event = perturbed.assets[ai].events[ei];
                std::string label;
                if (candidate.is_period) {
                    label = perturbation_label("period", event.period_years, candidate.value);
                    event.period_years = candidate.value;
                } else {
                    label = perturbation_label("offset", event.offset_years, candidate.value);
                    event.offset_years = candidate.value;
                }

                const int count = occurrence_count(event, model.horizon);
                EdgeEffect effect;
                effect.item = model.assets[ai].name + "/" + base_event.label;
                effect.perturbation = std::move(label);
                effect.delta_required_real =
                    required_opening_real(perturbed, scenario) - base_required;
                effect.delta_peak_nominal =
                    peak_nominal_shortfall(perturbed, scenario, opening).peak - base_peak;
                effect.entering = std::max(0, count - base_count);
                effect.leaving = std::max(0, base_count - count);
                effects.push_back(std::move(effect));
            }
        }
    }

    std::stable_sort(effects.begin(), effects.end(), [](const EdgeEffect& a, const EdgeEffect& b) {
        return abs(a.delta_peak_nominal) > abs(b.delta_peak_nominal);
    });
    return effects;
}

Money npv(std::span<const std::pair<Year, Money>> flows, Year base_year, Rate discount) {
    detail::require(discount > -1.0, "discount rate must exceed -100%");
    Money total{0.0};
    for (const auto& [year, amount] : flows) {
        detail::require(year >= base_year, "npv flows must not precede the base year");
        total += amount * discount_factor(discount, year - base_year);
    }
    return total;
}

ProjectionResult dcf_project(const Model& model, const IncomeScenario& scenario, Money opening,
                             DiscountMode mode) {
    model.validate();

    if (mode.kind() == DiscountMode::Kind::SignFlipHack) {
        Model hacked = model;
        hacked.inflation = -mode.rate();
        return project(hacked, scenario, opening);
    }

    const std::vector<Money> flows = yearly_flows(model);
    ProjectionResult result;
    result.scenario = scenario;
    result.years.reserve(flows.size());

    Money balance = opening;
    for (std::size_t i = 0; i < flows.size(); ++i) {
        balance += (scenario.annual_income - flows[i]) * mode.factor(static_cast<int>(i));
        const bool breach = balance < model.safety_balance;
        const Year year = model.horizon.start + static_cast<Year>(i);
        // Present values live in base-year money, so both rows carry the
        // same track and the safety level stays at its base-year value.
        result.years.push_back(YearRecord{year, balance, balance, model.safety_balance, breach});
        if (breach && !result.first_breach_year)
            result.first_breach_year = year;
    }
    return result;
}

std::vector<SensitivityPoint> inflation_sensitivity(const Model& model,
                                                    std::span<const Rate> inflation_grid,
                                                    Money opening) {
    model.validate();

    std::vector<SensitivityPoint> points;
    points.reserve(inflation_grid.size() * 3);
    for (const Rate inflation : inflation_grid) {
        detail::require(inflation > -1.0, "inflation must exceed -100%");
        Model variant = model;
        variant.inflation = inflation;
        for (const IncomeScenario& scenario : scenario_set(variant)) {
            const ShortfallReport report = peak_nominal_shortfall(variant, scenario, opening);
            points.push_back(SensitivityPoint{inflation, scenario.label,
                                              required_opening_real(variant, scenario),
                                              report.peak, report.binding_year});
        }
    }
    return points;
}

}  // namespace capplan
