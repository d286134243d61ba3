// SPDX-License-Identifier: Apache-2.0

#include "capplan/projection.hpp"

namespace capplan {

std::array<IncomeScenario, 3> scenario_set(const Model& model) {
    model.validate();
    return {IncomeScenario{ScenarioLabel::Low, model.income_central * model.income_low_mult},
            IncomeScenario{ScenarioLabel::Central, model.income_central},
            IncomeScenario{ScenarioLabel::High, model.income_central * model.income_high_mult}};
}

ProjectionResult project(const Model& model, const IncomeScenario& scenario,
                         std::optional<Money> opening_override) {
    model.validate();
    detail::require(scenario.annual_income.finite(), "scenario income must be finite");

    const std::vector<Money> flows = yearly_flows(model);
    ProjectionResult result;
    result.scenario = scenario;
    result.years.reserve(flows.size());

    Money balance = opening_override.value_or(model.opening_balance);
    for (std::size_t i = 0; i < flows.size(); ++i) {
        balance += scenario.annual_income - flows[i];
        const double factor = growth_factor(model.inflation, static_cast<int>(i));
        const bool breach = balance < model.safety_balance;
        const Year year = model.horizon.start + static_cast<Year>(i);
        result.years.push_back(YearRecord{year, balance, balance * factor,
                                          model.safety_balance * factor, breach});
        if (breach && !result.first_breach_year)
            result.first_breach_year = year;
    }
    return result;
}

}  // namespace capplan
