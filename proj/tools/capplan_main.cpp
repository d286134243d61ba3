// SPDX-License-Identifier: Apache-2.0
//
// capplan: long-horizon capital cash-flow planning and model audit from
// plain text files.
//
// Exit codes: 0 success, 1 usage or parse error, 2 failed check
// (--check breach or an error-severity finding under audit --strict),
// 3 internal error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "capplan/analysis.hpp"
#include "capplan/audit.hpp"
#include "capplan/model_file.hpp"
#include "capplan/report.hpp"

namespace {

using namespace capplan;

ReportFormat to_format(const std::string& name) {
    return name == "csv" ? ReportFormat::Csv : ReportFormat::Text;
}

void usage_error(const std::string& message) {
    throw CLI::ValidationError("invalid arguments", message);
}

std::vector<IncomeScenario> select_scenarios(const Model& model, const std::string& which) {
    const auto all = scenario_set(model);
    if (which == "all")
        return {all.begin(), all.end()};
    if (which == "low")
        return {all[0]};
    if (which == "central")
        return {all[1]};
    return {all[2]};
}

IncomeScenario single_scenario(const Model& model, const std::string& which,
                               std::optional<double> income_override) {
    if (income_override) {
        if (*income_override < 0.0)
            usage_error("--income-override must be non-negative");
        return IncomeScenario{ScenarioLabel::Central, Money{*income_override}};
    }
    return select_scenarios(model, which).front();
}

struct ProjectArgs {
    std::string model_path;
    std::string income = "all";
    std::optional<double> opening;
    std::string format = "text";
    bool check = false;
};

int run_project(const ProjectArgs& args) {
    const Model model = load_model_file(args.model_path);
    const std::optional<Money> opening =
        args.opening ? std::optional<Money>{Money{*args.opening}} : std::nullopt;

    std::vector<ProjectionResult> results;
    for (const IncomeScenario& scenario : select_scenarios(model, args.income))
        results.push_back(project(model, scenario, opening));

    std::cout << projection_report(results, to_format(args.format));
    if (args.check)
        for (const ProjectionResult& result : results)
            if (result.first_breach_year)
                return 2;
    return 0;
}

struct SolveArgs {
    std::string model_path;
    std::string income = "all";
    std::string format = "text";
};

int run_solve(const SolveArgs& args) {
    const Model model = load_model_file(args.model_path);
    std::vector<std::pair<IncomeScenario, Money>> requirements;
    for (const IncomeScenario& scenario : select_scenarios(model, args.income))
        requirements.emplace_back(scenario, required_opening_real(model, scenario));
    std::cout << solve_report(requirements, to_format(args.format));
    return 0;
}

struct ShortfallArgs {
    std::string model_path;
    std::string income = "all";
    std::optional<double> opening;
    std::string format = "text";
};

int run_shortfall(const ShortfallArgs& args) {
    const Model model = load_model_file(args.model_path);
    const Money opening = args.opening ? Money{*args.opening} : model.opening_balance;
    std::vector<ShortfallReport> reports;
    for (const IncomeScenario& scenario : select_scenarios(model, args.income))
        reports.push_back(peak_nominal_shortfall(model, scenario, opening));
    std::cout << shortfall_report(reports, to_format(args.format));
    return 0;
}

struct EdgeArgs {
    std::string model_path;
    std::string income = "central";
    std::optional<double> income_override;
    std::optional<double> opening;
    int radius = 1;
    std::string format = "text";
};

int run_edge_scan(const EdgeArgs& args) {
    const Model model = load_model_file(args.model_path);
    const IncomeScenario scenario = single_scenario(model, args.income, args.income_override);
    const Money opening = args.opening ? Money{*args.opening} : model.opening_balance;
    if (args.radius < 1)
        usage_error("--radius must be at least 1");
    const auto effects = edge_scan(model, scenario, opening, args.radius);
    std::cout << edge_report(effects, to_format(args.format));
    return 0;
}

struct SensitivityArgs {
    std::string model_path;
    std::vector<double> grid;
    std::optional<double> opening;
    std::string format = "text";
};

int run_sensitivity(const SensitivityArgs& args) {
    const Model model = load_model_file(args.model_path);
    for (const double inflation : args.grid)
        if (inflation <= -1.0)
            usage_error("--inflation-grid rates must exceed -1.0");
    const Money opening = args.opening ? Money{*args.opening} : model.opening_balance;
    const auto points = inflation_sensitivity(model, args.grid, opening);
    std::cout << sensitivity_report(points, to_format(args.format));
    return 0;
}

struct DcfArgs {
    std::string model_path;
    double discount = 0.0;
    std::string mode = "proper";
    std::string income = "central";
    std::optional<double> income_override;
    std::optional<double> opening;
    std::string format = "text";
};

int run_dcf(const DcfArgs& args) {
    const Model model = load_model_file(args.model_path);
    if (args.discount <= -1.0)
        usage_error("--discount must exceed -1.0");
    if (args.mode == "signflip" && args.discount >= 1.0)
        usage_error("signflip mode needs a rate below 1.0");

    const DiscountMode mode = args.mode == "signflip" ? DiscountMode::sign_flip_hack(args.discount)
                                                      : DiscountMode::proper(args.discount);
    const IncomeScenario scenario = single_scenario(model, args.income, args.income_override);
    const Money opening = args.opening ? Money{*args.opening} : model.opening_balance;

    const ProjectionResult result = dcf_project(model, scenario, opening, mode);
    std::cout << projection_report({&result, 1}, to_format(args.format));
    return 0;
}

struct HistoryArgs {
    std::string sheets_path;
    double tolerance = 1000.0;
    std::optional<double> ie_movement, depreciation, residual, uncapitalised;
    std::optional<int> period_years;
    std::optional<double> roce_start, roce_end, roce_inflation;
    std::optional<int> roce_years;
    std::optional<double> cash, cash_loss_rate;
    std::optional<int> cash_years;
    std::string format = "text";
};

int run_history(const HistoryArgs& args) {
    HistoryReport report;
    for (const BalanceSheetYear& sheet : load_sheets_file(args.sheets_path))
        report.identity_checks.emplace_back(sheet.year,
                                            check_identities(sheet, Money{args.tolerance}));

    const bool any_recon = args.ie_movement || args.depreciation || args.residual ||
                           args.uncapitalised || args.period_years;
    if (any_recon) {
        if (!(args.ie_movement && args.depreciation && args.residual && args.uncapitalised &&
              args.period_years))
            usage_error("profit reconstruction needs --ie-movement, --depreciation, "
                        "--residual-value, --uncapitalised-property and --period-years");
        report.reconstruction = reconstruct_profit(
            ProfitComponents{Money{*args.ie_movement}, Money{*args.depreciation},
                             Money{*args.residual}, Money{*args.uncapitalised}},
            *args.period_years);
    }

    const bool any_roce = args.roce_start || args.roce_end || args.roce_years ||
                          args.roce_inflation;
    if (any_roce) {
        if (!(args.roce_start && args.roce_end && args.roce_years && args.roce_inflation))
            usage_error("roce needs --roce-start, --roce-end, --roce-years and --roce-inflation");
        report.roce =
            roce(Money{*args.roce_start}, Money{*args.roce_end}, *args.roce_years,
                 *args.roce_inflation);
    }

    const bool any_drag = args.cash || args.cash_loss_rate || args.cash_years;
    if (any_drag) {
        if (!(args.cash && args.cash_loss_rate && args.cash_years))
            usage_error("cash drag needs --cash, --cash-loss-rate and --cash-years");
        report.cash_drag_loss = cash_drag(Money{*args.cash}, *args.cash_loss_rate,
                                          *args.cash_years);
    }

    std::cout << history_report(report, to_format(args.format));
    return 0;
}

struct AuditArgs {
    std::string model_path;
    std::optional<double> historical;
    bool strict = false;
    AuditConfig config;
    double r2_floor = 10'000.0;
    std::string format = "text";
};

int run_audit(const AuditArgs& args) {
    const Model model = load_model_file(args.model_path);
    AuditConfig config = args.config;
    config.r2_delta_floor = Money{args.r2_floor};

    const std::optional<Money> historical =
        args.historical ? std::optional<Money>{Money{*args.historical}} : std::nullopt;
    const auto diagnostics = audit_model(model, historical, config);
    std::cout << diagnostics_report(diagnostics, to_format(args.format), /*with_note=*/true);

    if (args.strict)
        for (const Diagnostic& d : diagnostics)
            if (d.severity == Severity::Error)
                return 2;
    return 0;
}

void add_format_flag(CLI::App* cmd, std::string& target) {
    cmd->add_option("--format", target, "Output format")
        ->check(CLI::IsMember({"csv", "text"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Long-horizon capital cash-flow planning and model audit"};
    app.require_subcommand(1);

    int exit_code = 0;

    ProjectArgs project_args;
    auto* project_cmd = app.add_subcommand("project", "Run the annual cash-flow projection");
    project_cmd->add_option("--model", project_args.model_path, "Model file")->required();
    project_cmd->add_option("--income", project_args.income, "Income scenario")
        ->check(CLI::IsMember({"all", "low", "central", "high"}))
        ->capture_default_str();
    project_cmd->add_option("--opening", project_args.opening, "Opening balance override");
    project_cmd->add_flag("--check", project_args.check, "Exit 2 if any year breaches");
    add_format_flag(project_cmd, project_args.format);
    project_cmd->callback([&] { exit_code = run_project(project_args); });

    SolveArgs solve_args;
    auto* solve_cmd =
        app.add_subcommand("solve", "Least opening balance that avoids every breach");
    solve_cmd->add_option("--model", solve_args.model_path, "Model file")->required();
    solve_cmd->add_option("--income", solve_args.income, "Income scenario")
        ->check(CLI::IsMember({"all", "low", "central", "high"}))
        ->capture_default_str();
    add_format_flag(solve_cmd, solve_args.format);
    solve_cmd->callback([&] { exit_code = run_solve(solve_args); });

    ShortfallArgs shortfall_args;
    auto* shortfall_cmd =
        app.add_subcommand("shortfall", "Peak shortfall on the inflated (nominal) row");
    shortfall_cmd->add_option("--model", shortfall_args.model_path, "Model file")->required();
    shortfall_cmd->add_option("--income", shortfall_args.income, "Income scenario")
        ->check(CLI::IsMember({"all", "low", "central", "high"}))
        ->capture_default_str();
    shortfall_cmd->add_option("--opening", shortfall_args.opening,
                              "Opening balance (defaults to the model's)");
    add_format_flag(shortfall_cmd, shortfall_args.format);
    shortfall_cmd->callback([&] { exit_code = run_shortfall(shortfall_args); });

    EdgeArgs edge_args;
    auto* edge_cmd =
        app.add_subcommand("edge-scan", "Perturb schedule periods/offsets at the horizon edge");
    edge_cmd->add_option("--model", edge_args.model_path, "Model file")->required();
    edge_cmd->add_option("--income", edge_args.income, "Income scenario")
        ->check(CLI::IsMember({"low", "central", "high"}))
        ->capture_default_str();
    edge_cmd->add_option("--income-override", edge_args.income_override,
                         "Use this annual income instead of a scenario");
    edge_cmd->add_option("--opening", edge_args.opening,
                         "Opening balance (defaults to the model's)");
    edge_cmd->add_option("--radius", edge_args.radius, "Perturb by +/-1 .. +/-radius years")
        ->capture_default_str();
    add_format_flag(edge_cmd, edge_args.format);
    edge_cmd->callback([&] { exit_code = run_edge_scan(edge_args); });

    SensitivityArgs sensitivity_args;
    auto* sensitivity_cmd =
        app.add_subcommand("sensitivity", "Cash-required metrics across an inflation grid");
    sensitivity_cmd->add_option("--model", sensitivity_args.model_path, "Model file")->required();
    sensitivity_cmd
        ->add_option("--inflation-grid", sensitivity_args.grid, "Comma-separated inflation rates")
        ->required()
        ->delimiter(',');
    sensitivity_cmd->add_option("--opening", sensitivity_args.opening,
                                "Opening balance (defaults to the model's)");
    add_format_flag(sensitivity_cmd, sensitivity_args.format);
    sensitivity_cmd->callback([&] { exit_code = run_sensitivity(sensitivity_args); });

    DcfArgs dcf_args;
    auto* dcf_cmd = app.add_subcommand("dcf", "Discounted projection, proper or sign-flip mode");
    dcf_cmd->add_option("--model", dcf_args.model_path, "Model file")->required();
    dcf_cmd->add_option("--discount", dcf_args.discount, "Per-annum discount rate")->required();
    dcf_cmd->add_option("--mode", dcf_args.mode, "Discounting mode")
        ->check(CLI::IsMember({"proper", "signflip"}))
        ->capture_default_str();
    dcf_cmd->add_option("--income", dcf_args.income, "Income scenario")
        ->check(CLI::IsMember({"low", "central", "high"}))
        ->capture_default_str();
    dcf_cmd->add_option("--income-override", dcf_args.income_override,
                        "Use this annual income instead of a scenario");
    dcf_cmd->add_option("--opening", dcf_args.opening,
                        "Opening balance (defaults to the model's)");
    add_format_flag(dcf_cmd, dcf_args.format);
    dcf_cmd->callback([&] { exit_code = run_dcf(dcf_args); });

    HistoryArgs history_args;
    auto* history_cmd =
        app.add_subcommand("history", "Balance-sheet identities and historical analyses");
    history_cmd->add_option("--sheets", history_args.sheets_path, "Balance-sheet table file")
        ->required();
    history_cmd->add_option("--tolerance", history_args.tolerance, "Identity tolerance in pounds")
        ->capture_default_str();
    history_cmd->add_option("--ie-movement", history_args.ie_movement,
                            "Reserve movement over the period");
    history_cmd->add_option("--depreciation", history_args.depreciation,
                            "Cumulative depreciation over the period");
    history_cmd->add_option("--residual-value", history_args.residual,
                            "Residual asset value left out of the books");
    history_cmd->add_option("--uncapitalised-property", history_args.uncapitalised,
                            "Improvements expensed instead of capitalised");
    history_cmd->add_option("--period-years", history_args.period_years,
                            "Reconstruction period in years");
    history_cmd->add_option("--roce-start", history_args.roce_start, "Opening funds");
    history_cmd->add_option("--roce-end", history_args.roce_end, "Closing funds, adjusted");
    history_cmd->add_option("--roce-years", history_args.roce_years, "Period in years");
    history_cmd->add_option("--roce-inflation", history_args.roce_inflation,
                            "Inflation for the real rate");
    history_cmd->add_option("--cash", history_args.cash, "Cash balance held");
    history_cmd->add_option("--cash-loss-rate", history_args.cash_loss_rate,
                            "Real per-annum return foregone");
    history_cmd->add_option("--cash-years", history_args.cash_years, "Holding period in years");
    add_format_flag(history_cmd, history_args.format);
    history_cmd->callback([&] { exit_code = run_history(history_args); });

    AuditArgs audit_args;
    auto* audit_cmd = app.add_subcommand("audit", "Run the model review rules");
    audit_cmd->add_option("--model", audit_args.model_path, "Model file")->required();
    audit_cmd->add_option("--historical-per-annum", audit_args.historical,
                          "Historical per-annum profit for the divergence rule");
    audit_cmd->add_flag("--strict", audit_args.strict, "Exit 2 on any error-severity finding");
    audit_cmd->add_option("--r2-floor", audit_args.r2_floor,
                          "Absolute delta floor for the truncation rule")
        ->capture_default_str();
    audit_cmd->add_option("--r2-fraction", audit_args.config.r2_delta_fraction,
                          "Fractional delta floor for the truncation rule")
        ->capture_default_str();
    audit_cmd->add_option("--r5-min-inflation", audit_args.config.r5_min_inflation,
                          "Long-run inflation floor")
        ->capture_default_str();
    add_format_flag(audit_cmd, audit_args.format);
    audit_cmd->callback([&] { exit_code = run_audit(audit_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 1;
    } catch (const capplan::ParseError& error) {
        std::cerr << "parse error: " << error.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    } catch (const std::exception& error) {
        std::cerr << "internal error: " << error.what() << "\n";
        return 3;
    }
    return exit_code;
}
