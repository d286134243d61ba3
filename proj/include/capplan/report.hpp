// SPDX-License-Identifier: Apache-2.0
//
// Deterministic report rendering. CSV output is byte-stable for identical
// inputs; amounts appear as whole pounds (half away from zero), rates as
// shortest round-trip decimals.

#pragma once

#include <optional>
#include <span>
#include <utility>

#include "capplan/analysis.hpp"
#include "capplan/audit.hpp"
#include "capplan/history.hpp"

namespace capplan {

enum class ReportFormat { Csv, Text };

/// Schema: year,scenario,real_balance,nominal_balance,nominal_safety,breach
/// One row per year per scenario; years ascending, scenarios in input order
/// (callers pass Low, Central, High).
std::string projection_report(std::span<const ProjectionResult> results, ReportFormat format);

/// Schema: scenario,required_opening_real
std::string solve_report(std::span<const std::pair<IncomeScenario, Money>> requirements,
                         ReportFormat format);

/// Schema: year,scenario,nominal_shortfall
std::string shortfall_report(std::span<const ShortfallReport> reports, ReportFormat format);

/// Schema: item,perturbation,delta_required_real,delta_peak_nominal,entering,leaving
std::string edge_report(std::span<const EdgeEffect> effects, ReportFormat format);

/// Schema: rule,severity,message,citations — citations as name=value pairs
/// joined with ';', values exact round-trip decimals. Text lines read
/// `<rule> <severity>: <message>`. `with_note` appends the fixed audit note
/// to text output.
std::string diagnostics_report(std::span<const Diagnostic> diagnostics, ReportFormat format,
                               bool with_note = false);

/// Schema: inflation,scenario,required_opening_real,peak_nominal_shortfall,binding_year
std::string sensitivity_report(std::span<const SensitivityPoint> points, ReportFormat format);

/// Inputs for the combined historical-analysis report; absent blocks are
/// omitted from the output.
struct HistoryReport {
    std::vector<std::pair<Year, std::vector<Diagnostic>>> identity_checks;
    std::optional<ProfitReconstruction> reconstruction;
    std::optional<RoceResult> roce;
    std::optional<Money> cash_drag_loss;
};

/// Schema: section,name,value
std::string history_report(const HistoryReport& report, ReportFormat format);

}  // namespace capplan
