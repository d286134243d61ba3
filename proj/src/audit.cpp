// SPDX-License-Identifier: Apache-2.0

#include "capplan/audit.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "capplan/analysis.hpp"
#include "capplan/format.hpp"

namespace capplan {

namespace {

void rule_negative_inflation(const Model& model, std::vector<Diagnostic>& out) {
    if (model.inflation >= 0.0)
        return;
    Diagnostic d;
    d.rule = "R1";
    d.severity = Severity::Warning;
    d.message = "inflation " + format_double(model.inflation) +
                " is negative: the nominal row now discounts instead of inflating, with factor "
                "(1+g)^n rather than 1/(1+d)^n";
    d.citations = {{"inflation", model.inflation}};
    out.push_back(std::move(d));
}

void rule_horizon_truncation(const Model& model, const AuditConfig& config,
                             std::vector<Diagnostic>& out) {
    // Stress configuration: no income, nothing in the bank. Expense edges
    // are then visible at full size in the shortfall metric.
    const IncomeScenario stress{ScenarioLabel::Central, Money{0.0}};
    const Money opening{0.0};

    const Money base_peak = peak_nominal_shortfall(model, stress, opening).peak;
    const Money threshold = std::max(config.r2_delta_floor, base_peak * config.r2_delta_fraction);

    // Keep the largest move per schedule item.
    std::map<std::string, EdgeEffect> worst;
    for (const EdgeEffect& effect : edge_scan(model, stress, opening)) {
        if (abs(effect.delta_peak_nominal) < threshold)
            continue;
        auto [it, inserted] = worst.emplace(effect.item, effect);
        if (!inserted && abs(effect.delta_peak_nominal) > abs(it->second.delta_peak_nominal))
            it->second = effect;
    }

    for (const auto& [item, effect] : worst) {
        Diagnostic d;
        d.rule = "R2";
        d.severity = Severity::Warning;
        d.message = "horizon truncation: perturbing " + item + " (" + effect.perturbation +
                    ") moves the peak nominal shortfall by " +
                    format_pounds(effect.delta_peak_nominal) + " against a base of " +
                    format_pounds(base_peak);
        d.citations = {{"delta_peak_nominal", effect.delta_peak_nominal.pounds()},
                       {"base_peak_nominal", base_peak.pounds()},
                       {"threshold", threshold.pounds()}};
        out.push_back(std::move(d));
    }
}

void rule_residual_value(const Model& model, std::vector<Diagnostic>& out) {
    std::vector<const AssetSchedule*> flagged;
    for (const AssetSchedule& asset : model.assets)
        if (asset.market_value > Money{0.0})
            flagged.push_back(&asset);
    std::sort(flagged.begin(), flagged.end(),
              [](const AssetSchedule* a, const AssetSchedule* b) { return a->name < b->name; });

    for (const AssetSchedule* asset : flagged) {
        Diagnostic d;
        d.rule = "R3";
        d.severity = Severity::Warning;
        d.message = "residual value omitted: asset \"" + asset->name + "\" has market value " +
                    format_pounds(asset->market_value) +
                    " but no sale proceeds ever enter the plan";
        d.citations = {{"market_value", asset->market_value.pounds()}};
        out.push_back(std::move(d));
    }
}

void rule_income_divergence(const Model& model, std::optional<Money> historical,
                            std::vector<Diagnostic>& out) {
    if (!historical)
        return;
    const double central = model.income_central.pounds();
    const double observed = historical->pounds();
    if (central <= 0.0 && observed <= 0.0)
        return;

    double divergence;
    if (central <= 0.0 || observed <= 0.0)
        divergence = std::numeric_limits<double>::infinity();
    else
        divergence = std::max(observed / central, central / observed);
    if (divergence < 2.0)
        return;

    Diagnostic d;
    d.rule = "R4";
    d.severity = Severity::Error;
    d.message = "income divergence: central income " + format_pounds(model.income_central) +
                " and the historical per-annum figure " + format_pounds(*historical) +
                " differ by a factor of " + format_double(divergence);
    d.citations = {{"income_central", central},
                   {"historical_per_annum", observed},
                   {"divergence", divergence}};
    out.push_back(std::move(d));
}

void rule_understated_inflation(const Model& model, const AuditConfig& config,
                                std::vector<Diagnostic>& out) {
    if (model.inflation >= config.r5_min_inflation)
        return;
    Diagnostic d;
    d.rule = "R5";
    d.severity = Severity::Warning;
    d.message = "inflation " + format_double(model.inflation) + " sits below the " +
                format_double(config.r5_min_inflation) +
                " floor; the UK long-run average is nearer 0.03";
    d.citations = {{"inflation", model.inflation},
                   {"floor", config.r5_min_inflation}};
    out.push_back(std::move(d));
}

}  // namespace

std::vector<Diagnostic> audit_model(const Model& model, std::optional<Money> historical_per_annum,
                                    const AuditConfig& config) {
    model.validate();

    std::vector<Diagnostic> diagnostics;
    rule_negative_inflation(model, diagnostics);
    rule_horizon_truncation(model, config, diagnostics);
    rule_residual_value(model, diagnostics);
    rule_income_divergence(model, historical_per_annum, diagnostics);
    rule_understated_inflation(model, config, diagnostics);
    return diagnostics;
}

std::string_view audit_note() {
    return "note: the schedule treats every future amount and date as fixed; in practice "
           "management can defer, trim or avoid capital events, and strategies other than "
           "running each asset to end of life (for example selling early and upgrading) are "
           "not explored here";
}

}  // namespace capplan
