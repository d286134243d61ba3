// SPDX-License-Identifier: Apache-2.0

#include "capplan/report.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include "capplan/format.hpp"

namespace capplan {

namespace {

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos)
        return value;
    std::string quoted = "\"";
    for (const char c : value) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string citations_field(const std::vector<Citation>& citations) {
    std::string joined;
    for (const Citation& citation : citations) {
        if (!joined.empty())
            joined += ';';
        joined += citation.name + "=" + format_double(citation.value);
    }
    return joined;
}

std::string fixed(double value, int places) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", places, value);
    return buffer;
}

std::string year_or_none(std::optional<Year> year) {
    return year ? std::to_string(*year) : "none";
}

}  // namespace

std::string projection_report(std::span<const ProjectionResult> results, ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "year,scenario,real_balance,nominal_balance,nominal_safety,breach\n";
        if (results.empty())
            return out.str();
        const std::size_t years = results.front().years.size();
        for (std::size_t yi = 0; yi < years; ++yi)
            for (const ProjectionResult& result : results) {
                const YearRecord& r = result.years[yi];
                out << r.year << ',' << to_string(result.scenario.label) << ','
                    << format_pounds(r.real_balance) << ',' << format_pounds(r.nominal_balance)
                    << ',' << format_pounds(r.nominal_safety) << ','
                    << (r.breach ? "true" : "false") << '\n';
            }
        return out.str();
    }

    for (const ProjectionResult& result : results) {
        out << "scenario " << to_string(result.scenario.label) << " (annual income "
            << format_pounds(result.scenario.annual_income) << ")\n";
        out << "  year  balance [" << to_string(MoneyConvention::BaseYearReal) << "]  balance ["
            << to_string(MoneyConvention::Nominal) << "]  safety ["
            << to_string(MoneyConvention::Nominal) << "]  breach\n";
        for (const YearRecord& r : result.years)
            out << "  " << r.year << std::setw(25) << format_pounds(r.real_balance)
                << std::setw(19) << format_pounds(r.nominal_balance) << std::setw(18)
                << format_pounds(r.nominal_safety) << std::setw(8) << (r.breach ? "yes" : "-")
                << '\n';
        out << "  first breach: " << year_or_none(result.first_breach_year) << "\n";
    }
    return out.str();
}

std::string solve_report(std::span<const std::pair<IncomeScenario, Money>> requirements,
                         ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "scenario,required_opening_real\n";
        for (const auto& [scenario, required] : requirements)
            out << to_string(scenario.label) << ',' << format_pounds(required) << '\n';
        return out.str();
    }
    for (const auto& [scenario, required] : requirements)
        out << "scenario " << to_string(scenario.label) << " (annual income "
            << format_pounds(scenario.annual_income)
            << "): required opening balance " << format_pounds(required) << "\n";
    return out.str();
}

std::string shortfall_report(std::span<const ShortfallReport> reports, ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "year,scenario,nominal_shortfall\n";
        if (reports.empty())
            return out.str();
        const std::size_t years = reports.front().per_year.size();
        for (std::size_t yi = 0; yi < years; ++yi)
            for (const ShortfallReport& report : reports)
                out << report.per_year[yi].first << ',' << to_string(report.scenario.label) << ','
                    << format_pounds(report.per_year[yi].second) << '\n';
        return out.str();
    }

    for (const ShortfallReport& report : reports) {
        out << "scenario " << to_string(report.scenario.label) << ": peak nominal shortfall "
            << format_pounds(report.peak) << ", binding year "
            << year_or_none(report.binding_year) << "\n";
        for (const auto& [year, shortfall] : report.per_year)
            if (shortfall > Money{0.0})
                out << "  " << year << "  " << format_pounds(shortfall) << "\n";
    }
    return out.str();
}

std::string edge_report(std::span<const EdgeEffect> effects, ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "item,perturbation,delta_required_real,delta_peak_nominal,entering,leaving\n";
        for (const EdgeEffect& effect : effects)
            out << csv_field(effect.item) << ',' << csv_field(effect.perturbation) << ','
                << format_pounds(effect.delta_required_real) << ','
                << format_pounds(effect.delta_peak_nominal) << ',' << effect.entering << ','
                << effect.leaving << '\n';
        return out.str();
    }

    if (effects.empty())
        return "no recurring events to perturb\n";
    for (const EdgeEffect& effect : effects) {
        out << effect.item << " (" << effect.perturbation
            << "): delta required " << format_pounds(effect.delta_required_real)
            << ", delta peak nominal " << format_pounds(effect.delta_peak_nominal);
        if (effect.entering > 0)
            out << ", " << effect.entering << " occurrence(s) enter the horizon";
        if (effect.leaving > 0)
            out << ", " << effect.leaving << " occurrence(s) leave the horizon";
        out << "\n";
    }
    return out.str();
}

std::string diagnostics_report(std::span<const Diagnostic> diagnostics, ReportFormat format,
                               bool with_note) {
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "rule,severity,message,citations\n";
        for (const Diagnostic& d : diagnostics)
            out << d.rule << ',' << to_string(d.severity) << ',' << csv_field(d.message) << ','
                << csv_field(citations_field(d.citations)) << '\n';
        return out.str();
    }

    if (diagnostics.empty())
        out << "clean: no findings\n";
    for (const Diagnostic& d : diagnostics)
        out << d.rule << ' ' << to_string(d.severity) << ": " << d.message << "\n";
    if (with_note)
        out << audit_note() << "\n";
    return out.str();
}

std::string sensitivity_report(std::span<const SensitivityPoint> points, ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "inflation,scenario,required_opening_real,peak_nominal_shortfall,binding_year\n";
        for (const SensitivityPoint& p : points)
            out << format_double(p.inflation) << ',' << to_string(p.scenario) << ','
                << format_pounds(p.required_opening_real) << ','
                << format_pounds(p.peak_nominal_shortfall) << ','
                << (p.binding_year ? std::to_string(*p.binding_year) : "") << '\n';
        return out.str();
    }

    for (const SensitivityPoint& p : points)
        out << "inflation " << format_double(p.inflation) << ", scenario " << to_string(p.scenario)
            << ": required opening " << format_pounds(p.required_opening_real)
            << ", peak nominal shortfall " << format_pounds(p.peak_nominal_shortfall)
            << ", binding year " << year_or_none(p.binding_year) << "\n";
    return out.str();
}

std::string history_report(const HistoryReport& report, ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "section,name,value\n";
        for (const auto& [year, diagnostics] : report.identity_checks) {
            if (diagnostics.empty()) {
                out << "identities," << year << ",ok\n";
                continue;
            }
            for (const Diagnostic& d : diagnostics)
                out << "identities," << year << ' ' << d.rule << ',' << csv_field(d.message)
                    << '\n';
        }
        if (report.reconstruction) {
            const ProfitReconstruction& r = *report.reconstruction;
            out << "reconstruction,ie_movement," << format_pounds(r.components.ie_movement)
                << '\n';
            out << "reconstruction,cumulative_depreciation,"
                << format_pounds(r.components.cumulative_depreciation) << '\n';
            out << "reconstruction,residual_asset_value,"
                << format_pounds(r.components.residual_asset_value) << '\n';
            out << "reconstruction,uncapitalised_property,"
                << format_pounds(r.components.uncapitalised_property) << '\n';
            out << "reconstruction,period_years," << r.period_years << '\n';
            out << "reconstruction,total," << format_pounds(r.total) << '\n';
            out << "reconstruction,per_annum," << format_pounds(r.per_annum) << '\n';
        }
        if (report.roce) {
            out << "roce,ratio," << format_double(report.roce->ratio) << '\n';
            out << "roce,nominal_annual," << format_double(report.roce->nominal_annual) << '\n';
            out << "roce,real_annual," << format_double(report.roce->real_annual) << '\n';
        }
        if (report.cash_drag_loss)
            out << "cash_drag,loss," << format_pounds(*report.cash_drag_loss) << '\n';
        return out.str();
    }

    if (!report.identity_checks.empty()) {
        out << "identity checks\n";
        for (const auto& [year, diagnostics] : report.identity_checks) {
            if (diagnostics.empty()) {
                out << "  " << year << ": ok\n";
                continue;
            }
            for (const Diagnostic& d : diagnostics)
                out << "  " << year << " " << d.rule << ' ' << to_string(d.severity) << ": "
                    << d.message << "\n";
        }
    }
    if (report.reconstruction) {
        const ProfitReconstruction& r = *report.reconstruction;
        out << "profit before depreciation, reconstructed over " << r.period_years << " years\n";
        out << "  ie movement              " << format_pounds(r.components.ie_movement) << "\n";
        out << "  cumulative depreciation  "
            << format_pounds(r.components.cumulative_depreciation) << "\n";
        out << "  residual asset value     " << format_pounds(r.components.residual_asset_value)
            << "\n";
        out << "  uncapitalised property   " << format_pounds(r.components.uncapitalised_property)
            << "\n";
        out << "  total                    " << format_pounds(r.total) << "\n";
        out << "  per annum                " << format_pounds(r.per_annum) << "\n";
    }
    if (report.roce) {
        out << "return on capital employed\n";
        out << "  ratio            " << fixed(report.roce->ratio, 4) << " ("
            << fixed(report.roce->ratio * 100.0, 1) << "%)\n";
        out << "  nominal annual   " << fixed(report.roce->nominal_annual * 100.0, 2) << "%\n";
        out << "  real annual      " << fixed(report.roce->real_annual * 100.0, 2) << "%\n";
    }
    if (report.cash_drag_loss)
        out << "cash drag\n  loss             " << format_pounds(*report.cash_drag_loss) << "\n";
    return out.str();
}

}  // namespace capplan
