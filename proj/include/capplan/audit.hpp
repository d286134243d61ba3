// SPDX-License-Identifier: Apache-2.0
//
// Machine-checkable review rules over a Model. Each rule encodes one class
// of modelling flaw so it can be flagged automatically instead of being
// rediscovered by hand.

#pragma once

#include <optional>

#include "capplan/diagnostic.hpp"
#include "capplan/schedule.hpp"

namespace capplan {

struct AuditConfig {
    /// R2 fires when an edge-scan perturbation moves the peak nominal
    /// shortfall by at least max(absolute floor, fraction of the base peak).
    Money r2_delta_floor{10'000.0};
    double r2_delta_fraction = 0.05;
    /// R5 fires when the model inflation sits below this long-run floor.
    Rate r5_min_inflation = 0.025;
};

/// Runs every audit rule and returns the findings sorted by rule id, then by
/// the asset or item they concern. An empty result is a clean bill.
///
/// R1 (warning)  negative inflation: the nominal row has been turned into a
///               sign-flipped discounting row.
/// R2 (warning)  horizon truncation: a +/-1-year schedule perturbation moves
///               the peak nominal shortfall materially. The embedded scan
///               stresses the model with zero income and a zero opening
///               balance so schedule edges show at full size.
/// R3 (warning)  residual value omitted: an asset carries a market value but
///               no sale proceeds ever enter the plan.
/// R4 (error)    income divergence: central income and the historical
///               per-annum figure differ by a factor of two or more, in
///               either direction.
/// R5 (warning)  understated inflation relative to the long-run average.
std::vector<Diagnostic> audit_model(const Model& model,
                                    std::optional<Money> historical_per_annum = std::nullopt,
                                    const AuditConfig& config = {});

/// Fixed note attached to rendered audit reports: flexibility findings that
/// no computable check can represent.
std::string_view audit_note();

}  // namespace capplan
