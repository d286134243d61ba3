// SPDX-License-Identifier: Apache-2.0
//
// Plain-text file formats: the sectioned model file and the column-per-year
// balance-sheet table. Parsing is strict; unknown sections, unknown keys and
// malformed values are errors carrying the offending line number.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "capplan/history.hpp"
#include "capplan/schedule.hpp"

namespace capplan {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    [[nodiscard]] int line() const noexcept { return line_; }

  private:
    int line_;
};

/// Parses the sectioned model format:
///
///   [model]
///   horizon_start = 2016
///   ...
///   [asset "asset-one"]
///   market_value = 150000
///   event "refurbish" amount=18000 offset=4 period=30
///   [oneoff "survey"]
///   amount = 2000
///   year = 2018
///   [option "new-asset"]
///   amount = 40000
///   year = 2016
///   enabled = false
///
/// Comments run from '#' to end of line. Amounts are whole pounds; rates and
/// multipliers are decimals.
Model parse_model_file(std::string_view text);
Model load_model_file(const std::filesystem::path& path);

/// Canonical text for a model; parse(serialize(m)) == m.
std::string serialize_model(const Model& model);

/// Parses the balance-sheet table: a comma-delimited header
/// `field,<year>,...` followed by one row per field name, empty cells for
/// absent figures. Recognised fields are the BalanceSheetYear members.
std::vector<BalanceSheetYear> parse_sheets_file(std::string_view text);
std::vector<BalanceSheetYear> load_sheets_file(const std::filesystem::path& path);

}  // namespace capplan
