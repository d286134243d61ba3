// SPDX-License-Identifier: Apache-2.0
//
// Review analytics over a Model: the opening-cash goal-seek, the peak
// nominal shortfall, horizon edge-effect scanning, NPV, and DCF projection
// in both the conventional mode and the sign-flip-hack mode.

#pragma once

#include <span>

#include "capplan/projection.hpp"

namespace capplan {

struct ShortfallReport {
    IncomeScenario scenario;
    Money peak;                        // max over years of the per-year shortfall, >= 0
    std::optional<Year> binding_year;  // earliest year attaining the peak; absent iff peak == 0
    std::vector<std::pair<Year, Money>> per_year;  // nominal shortfall for every horizon year
};

/// One perturbation record from the horizon-truncation scan.
/// Deltas are (perturbed minus base).
struct EdgeEffect {
    std::string item;           // "<asset>/<event label>"
    std::string perturbation;   // e.g. "period 30 -> 31"
    Money delta_required_real;
    Money delta_peak_nominal;
    int entering = 0;  // occurrences gained within the horizon
    int leaving = 0;   // occurrences lost from the horizon
};

/// How future flows are brought back to the base year.
///
/// Proper uses the conventional factor 1/(1+d)^n. SignFlipHack instead
/// applies (1-r)^n, which is what entering a negative inflation rate into
/// the nominal row produces.
class DiscountMode {
  public:
    enum class Kind { Proper, SignFlipHack };

    static DiscountMode proper(Rate discount) {
        detail::require(discount > -1.0, "discount rate must exceed -100%");
        return DiscountMode{Kind::Proper, discount};
    }
    static DiscountMode sign_flip_hack(Rate rate) {
        detail::require(rate < 1.0, "sign-flip rate must be below 100%");
        return DiscountMode{Kind::SignFlipHack, rate};
    }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] Rate rate() const noexcept { return rate_; }

    /// Factor applied to a flow `years_from_base` years out.
    [[nodiscard]] double factor(int years_from_base) const {
        return kind_ == Kind::Proper ? discount_factor(rate_, years_from_base)
                                     : growth_factor(-rate_, years_from_base);
    }

  private:
    DiscountMode(Kind kind, Rate rate) : kind_(kind), rate_(rate) {}
    Kind kind_;
    Rate rate_;
};

/// Least opening balance with no breach in any year; 0 if none is needed.
/// Closed form: max(0, safety - min over t of cumulative net flow through t).
Money required_opening_real(const Model& model, const IncomeScenario& scenario);

/// Worst-year shortfall measured on the inflated (nominal) row, starting
/// from the given opening balance. Ties break toward the earliest year.
ShortfallReport peak_nominal_shortfall(const Model& model, const IncomeScenario& scenario,
                                       Money opening);

/// Perturbs every recurring event's period and offset by +/-1 .. +/-radius
/// (skipping values that would be invalid) and reports how both cash-required
/// metrics move. Sorted by |delta_peak_nominal| descending; ties keep
/// schedule order.
std::vector<EdgeEffect> edge_scan(const Model& model, const IncomeScenario& scenario,
                                  Money opening, int radius = 1);

/// Net present value of dated signed flows at the base year.
Money npv(std::span<const std::pair<Year, Money>> flows, Year base_year, Rate discount);

/// Discounted projection.
///
/// Proper mode accumulates each year's net flow scaled by the mode factor
/// and compares the resulting present-value balance against the constant
/// base-year safety level. SignFlipHack mode reproduces the negative-rate
/// trick exactly: it reruns the plain projection with inflation set to -rate,
/// so the "discounting" shows up in the nominal row and the safety row
/// deflates along with it.
ProjectionResult dcf_project(const Model& model, const IncomeScenario& scenario, Money opening,
                             DiscountMode mode);

/// One grid point of the inflation sensitivity sweep.
struct SensitivityPoint {
    Rate inflation;
    ScenarioLabel scenario;
    Money required_opening_real;
    Money peak_nominal_shortfall;
    std::optional<Year> binding_year;
};

/// Re-evaluates both cash-required metrics for every scenario at each
/// inflation value, in grid order.
std::vector<SensitivityPoint> inflation_sensitivity(const Model& model,
                                                    std::span<const Rate> inflation_grid,
                                                    Money opening);

}  // namespace capplan
