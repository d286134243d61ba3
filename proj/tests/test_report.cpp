// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>

#include "capplan/model_file.hpp"
#include "capplan/report.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace capplan;
using testutil::demo_model;

namespace {

Model tiny_model() {
    Model m;
    m.horizon = Horizon{2016, 2017};
    m.opening_balance = Money{100.0};
    m.inflation = 0.0;
    m.safety_balance = Money{50.0};
    m.income_central = Money{10.0};
    return m;
}

}  // namespace

TEST_CASE("projection csv uses the pinned schema, year-major") {
    const Model model = tiny_model();
    std::vector<ProjectionResult> results;
    for (const IncomeScenario& scenario : scenario_set(model))
        results.push_back(project(model, scenario));

    CHECK(projection_report(results, ReportFormat::Csv) ==
          "year,scenario,real_balance,nominal_balance,nominal_safety,breach\n"
          "2016,low,105,105,50,false\n"
          "2016,central,110,110,50,false\n"
          "2016,high,115,115,50,false\n"
          "2017,low,110,110,50,false\n"
          "2017,central,120,120,50,false\n"
          "2017,high,130,130,50,false\n");
}

TEST_CASE("projection csv flags breaches and rounds half away from zero") {
    ProjectionResult result;
    result.scenario = IncomeScenario{ScenarioLabel::Central, Money{0.0}};
    result.years = {YearRecord{2016, Money{2.5}, Money{2.5}, Money{10.0}, true},
                    YearRecord{2017, Money{-2.5}, Money{-2.5}, Money{10.0}, true}};
    result.first_breach_year = 2016;

    CHECK(projection_report({&result, 1}, ReportFormat::Csv) ==
          "year,scenario,real_balance,nominal_balance,nominal_safety,breach\n"
          "2016,central,3,3,10,true\n"
          "2017,central,-3,-3,10,true\n");

    const std::string text = projection_report({&result, 1}, ReportFormat::Text);
    CHECK(text.find("first breach: 2016") != std::string::npos);
    CHECK(text.find("yes") != std::string::npos);
}

TEST_CASE("an empty edge list renders as the header only") {
    CHECK(edge_report({}, ReportFormat::Csv) ==
          "item,perturbation,delta_required_real,delta_peak_nominal,entering,leaving\n");
    CHECK(edge_report({}, ReportFormat::Text) == "no recurring events to perturb\n");
}

TEST_CASE("diagnostics text lines follow `rule severity: message`") {
    const std::vector<Diagnostic> diagnostics{
        {"R2", Severity::Warning, "first finding", {}},
        {"R4", Severity::Error, "second finding", {{"ratio", 2.25625}}}};
    CHECK(diagnostics_report(diagnostics, ReportFormat::Text) ==
          "R2 warning: first finding\n"
          "R4 error: second finding\n");

    const std::string with_note = diagnostics_report(diagnostics, ReportFormat::Text, true);
    CHECK(with_note.find(audit_note()) != std::string::npos);

    CHECK(diagnostics_report({}, ReportFormat::Text) == "clean: no findings\n");
    CHECK(diagnostics_report({}, ReportFormat::Csv) == "rule,severity,message,citations\n");
}

TEST_CASE("diagnostic citations survive the csv round trip bit for bit") {
    const std::vector<Diagnostic> diagnostics{
        {"R9", Severity::Warning, "numeric fidelity",
         {{"a", 0.1 + 0.2}, {"b", -35292.16857639629}, {"c", 1e-17}, {"d", 2.0 / 3.0}}}};
    const std::string csv = diagnostics_report(diagnostics, ReportFormat::Csv);

    // Last comma-separated field of the data row holds the citations.
    const std::size_t newline = csv.find('\n');
    std::string row = csv.substr(newline + 1);
    row.pop_back();  // trailing newline
    const std::string field = row.substr(row.rfind(',') + 1);

    std::size_t start = 0;
    std::vector<double> recovered;
    while (start < field.size()) {
        std::size_t stop = field.find(';', start);
        if (stop == std::string::npos)
            stop = field.size();
        const std::string pair = field.substr(start, stop - start);
        recovered.push_back(std::strtod(pair.substr(pair.find('=') + 1).c_str(), nullptr));
        start = stop + 1;
    }
    REQUIRE(recovered.size() == 4);
    CHECK(recovered[0] == 0.1 + 0.2);
    CHECK(recovered[1] == -35292.16857639629);
    CHECK(recovered[2] == 1e-17);
    CHECK(recovered[3] == 2.0 / 3.0);
}

TEST_CASE("csv fields with commas or quotes are quoted") {
    const std::vector<Diagnostic> diagnostics{
        {"R1", Severity::Warning, "message, with \"both\" hazards", {}}};
    const std::string csv = diagnostics_report(diagnostics, ReportFormat::Csv);
    CHECK(csv.find("\"message, with \"\"both\"\" hazards\"") != std::string::npos);
}

TEST_CASE("solve and shortfall and sensitivity render deterministically") {
    const Model model = demo_model();
    const auto scenarios = scenario_set(model);

    std::vector<std::pair<IncomeScenario, Money>> requirements;
    for (const auto& scenario : scenarios)
        requirements.emplace_back(scenario, required_opening_real(model, scenario));
    CHECK(solve_report(requirements, ReportFormat::Csv) ==
          "scenario,required_opening_real\n"
          "low,28000\n"
          "central,22000\n"
          "high,18000\n");

    std::vector<ShortfallReport> shortfalls{
        peak_nominal_shortfall(model, scenarios[1], Money{110000.0})};
    const std::string csv = shortfall_report(shortfalls, ReportFormat::Csv);
    CHECK(csv.substr(0, 31) == "year,scenario,nominal_shortfall");
    CHECK(csv.find("2016,central,0\n") != std::string::npos);
    CHECK(shortfall_report(shortfalls, ReportFormat::Text).find("peak nominal shortfall 0") !=
          std::string::npos);

    const std::vector<Rate> grid{0.02, 0.03};
    const auto points = inflation_sensitivity(model, grid, Money{0.0});
    const std::string sense = sensitivity_report(points, ReportFormat::Csv);
    CHECK(sense.rfind("inflation,scenario,required_opening_real,peak_nominal_shortfall,"
                      "binding_year\n", 0) == 0);
    CHECK(sense.find("0.02,central,22000,") != std::string::npos);
    CHECK(sense == sensitivity_report(points, ReportFormat::Csv));
}

TEST_CASE("edge report carries entering and leaving counts") {
    const auto effects =
        edge_scan(demo_model(), IncomeScenario{ScenarioLabel::Central, Money{0.0}}, Money{0.0});
    const std::string csv = edge_report(effects, ReportFormat::Csv);
    CHECK(csv.find("asset-one/refurbish,period 30 -> 31,-18000,-35292,0,1\n") !=
          std::string::npos);
    const std::string text = edge_report(effects, ReportFormat::Text);
    CHECK(text.find("occurrence(s) leave the horizon") != std::string::npos);
}

TEST_CASE("history report renders every block it is given") {
    HistoryReport report;
    report.identity_checks = {{1993, {}},
                              {2016, {{"B1", Severity::Error, "made-up gap", {}}}}};
    report.reconstruction = reconstruct_profit(
        {Money{25000.0}, Money{126000.0}, Money{150000.0}, Money{60000.0}}, 20);
    report.roce = roce(Money{201000.0}, Money{574000.0}, 20, 0.02);
    report.cash_drag_loss = cash_drag(Money{133000.0}, 0.028, 15);

    const std::string csv = history_report(report, ReportFormat::Csv);
    CHECK(csv.find("section,name,value\n") == 0);
    CHECK(csv.find("identities,1993,ok\n") != std::string::npos);
    CHECK(csv.find("identities,2016 B1,made-up gap\n") != std::string::npos);
    CHECK(csv.find("reconstruction,total,361000\n") != std::string::npos);
    CHECK(csv.find("reconstruction,per_annum,18050\n") != std::string::npos);
    CHECK(csv.find("roce,ratio,2.85") != std::string::npos);
    CHECK(csv.find("cash_drag,loss,68256\n") != std::string::npos);

    const std::string text = history_report(report, ReportFormat::Text);
    CHECK(text.find("per annum                18050") != std::string::npos);
    CHECK(text.find("285.6%") != std::string::npos);

    const HistoryReport empty;
    CHECK(history_report(empty, ReportFormat::Csv) == "section,name,value\n");
}
