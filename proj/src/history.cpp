// SPDX-License-Identifier: Apache-2.0

#include "capplan/history.hpp"

namespace capplan {

namespace {

std::string pounds(Money m) { return std::to_string(m.rounded_pounds()); }

}  // namespace

std::vector<Diagnostic> check_identities(const BalanceSheetYear& sheet, Money tolerance) {
    detail::require(tolerance >= Money{0.0}, "tolerance must be non-negative");

    std::vector<Diagnostic> diagnostics;
    const std::string year = std::to_string(sheet.year);

    const Money assets = sheet.total_assets();
    const Money funding = sheet.shareholders_funds + sheet.creditors_long;
    if (abs(assets - funding) > tolerance) {
        Diagnostic d;
        d.rule = "B1";
        d.severity = Severity::Error;
        d.message = year + ": total assets " + pounds(assets) +
                    " do not equal shareholders funds plus long-term creditors " +
                    pounds(funding) + " (gap " + pounds(assets - funding) + ")";
        d.citations = {{"total_assets", assets.pounds()},
                       {"shareholders_funds_plus_creditors_long", funding.pounds()},
                       {"gap", (assets - funding).pounds()}};
        diagnostics.push_back(std::move(d));
    }

    const Money reserves = sheet.ie_reserve + sheet.capital_reserve;
    if (abs(reserves - sheet.shareholders_funds) > tolerance) {
        Diagnostic d;
        d.rule = "B2";
        d.severity = Severity::Error;
        d.message = year + ": reserves " + pounds(reserves) +
                    " do not equal shareholders funds " + pounds(sheet.shareholders_funds) +
                    " (gap " + pounds(reserves - sheet.shareholders_funds) + ")";
        d.citations = {{"reserves", reserves.pounds()},
                       {"shareholders_funds", sheet.shareholders_funds.pounds()},
                       {"gap", (reserves - sheet.shareholders_funds).pounds()}};
        diagnostics.push_back(std::move(d));
    }

    return diagnostics;
}

ProfitReconstruction reconstruct_profit(const ProfitComponents& components, int period_years) {
    detail::require(period_years >= 1, "reconstruction period must be at least one year");

    const Money total = components.ie_movement + components.cumulative_depreciation +
                        components.residual_asset_value + components.uncapitalised_property;
    return ProfitReconstruction{components, period_years, total, total / period_years};
}

RoceResult roce(Money start_funds, Money end_funds_adjusted, int years, Rate inflation) {
    detail::require(start_funds > Money{0.0}, "start funds must be positive");
    detail::require(end_funds_adjusted > Money{0.0}, "end funds must be positive");
    detail::require(years >= 1, "period must be at least one year");

    const Rate nominal = annualized_growth(start_funds, end_funds_adjusted, years);
    return RoceResult{end_funds_adjusted / start_funds, nominal, real_rate(nominal, inflation)};
}

Money cash_drag(Money cash, Rate real_loss_rate, int years) {
    detail::require(years >= 0, "cash drag rejects negative year counts");
    return cash * (growth_factor(real_loss_rate, years) - 1.0);
}

}  // namespace capplan
