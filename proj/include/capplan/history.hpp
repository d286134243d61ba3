// SPDX-License-Identifier: Apache-2.0
//
// Historical statutory data: balance-sheet identity checks, reconstruction of
// estimated profit before depreciation, ROCE and cash-drag analyses.

#pragma once

#include "capplan/diagnostic.hpp"
#include "capplan/money_time.hpp"

namespace capplan {

/// One year of key balance-sheet data. Fields missing from the source are
/// left at 0. Net current assets and total assets are derived, not stored.
struct BalanceSheetYear {
    Year year = kYearMin;
    Money tangible_assets;
    Money stock;
    Money debtors;
    Money cash;
    Money creditors_one_year;
    Money creditors_long;
    Money ie_reserve;        // income and expenditure account
    Money capital_reserve;
    Money shareholders_funds;

    [[nodiscard]] Money net_current() const {
        return stock + debtors + cash - creditors_one_year;
    }
    [[nodiscard]] Money total_assets() const { return tangible_assets + net_current(); }

    bool operator==(const BalanceSheetYear&) const = default;
};

/// Accounting identity checks. The default tolerance absorbs rounding to the
/// nearest thousand in published figures.
///
/// B1: tangible + stock + debtors + cash - creditors (one year)
///     == shareholders funds + creditors (long term)
/// B2: income-and-expenditure reserve + capital reserve == shareholders funds
std::vector<Diagnostic> check_identities(const BalanceSheetYear& sheet,
                                         Money tolerance = Money{1000.0});

struct ProfitComponents {
    Money ie_movement;              // movement on the income-and-expenditure account
    Money cumulative_depreciation;
    Money residual_asset_value;
    Money uncapitalised_property;

    bool operator==(const ProfitComponents&) const = default;
};

struct ProfitReconstruction {
    ProfitComponents components;
    int period_years;
    Money total;      // sum of the four components
    Money per_annum;  // total / period_years
};

/// Estimated profit before depreciation over a period, rebuilt from the
/// reserve movement plus the amounts the book figures leave out.
ProfitReconstruction reconstruct_profit(const ProfitComponents& components, int period_years);

struct RoceResult {
    double ratio;        // end funds / start funds
    Rate nominal_annual;
    Rate real_annual;
};

/// Growth of (adjusted) shareholders' funds over a period, annualized, with
/// the real rate via the exact Fisher relation.
RoceResult roce(Money start_funds, Money end_funds_adjusted, int years, Rate inflation);

/// Capital foregone by holding cash instead of assets earning
/// `real_loss_rate` more per annum: cash * ((1 + r)^years - 1).
Money cash_drag(Money cash, Rate real_loss_rate, int years);

}  // namespace capplan
