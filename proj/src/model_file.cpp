// SPDX-License-Identifier: Apache-2.0

#include "capplan/model_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "capplan/format.hpp"

namespace capplan {

namespace {

std::string trim(std::string_view s) {
    std::size_t begin = 0, end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin])))
        ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1])))
        --end;
    return std::string(s.substr(begin, end - begin));
}

// Strips a trailing comment; '#' inside a quoted label does not count.
std::string strip_comment(std::string_view line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"')
            quoted = !quoted;
        else if (line[i] == '#' && !quoted)
            return std::string(line.substr(0, i));
    }
    return std::string(line);
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t stop = text.find('\n', start);
        if (stop == std::string_view::npos)
            stop = text.size();
        std::string line(text.substr(start, stop - start));
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(std::move(line));
        start = stop + 1;
        if (stop == text.size())
            break;
    }
    return lines;
}

long long parse_whole_pounds(const std::string& token, int line) {
    long long value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc{} || result.ptr != end || token.empty())
        throw ParseError(line, "expected a whole-pound amount, got \"" + token + "\"");
    return value;
}

double parse_decimal(const std::string& token, int line) {
    if (token.empty())
        throw ParseError(line, "expected a number, got an empty value");
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &consumed);
    } catch (const std::exception&) {
        throw ParseError(line, "expected a number, got \"" + token + "\"");
    }
    if (consumed != token.size())
        throw ParseError(line, "expected a number, got \"" + token + "\"");
    return value;
}

int parse_integer(const std::string& token, int line) {
    int value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc{} || result.ptr != end || token.empty())
        throw ParseError(line, "expected an integer, got \"" + token + "\"");
    return value;
}

bool parse_bool(const std::string& token, int line) {
    if (token == "true")
        return true;
    if (token == "false")
        return false;
    throw ParseError(line, "expected true or false, got \"" + token + "\"");
}

// `[asset "name"]` -> {"asset", "name"}; `[model]` -> {"model", ""}.
std::pair<std::string, std::string> parse_section_header(const std::string& line, int line_no) {
    if (line.back() != ']')
        throw ParseError(line_no, "malformed section header \"" + line + "\"");
    const std::string inner = trim(line.substr(1, line.size() - 2));
    const std::size_t space = inner.find(' ');
    if (space == std::string::npos) {
        if (inner == "model")
            return {"model", ""};
        throw ParseError(line_no, "unknown section \"" + inner + "\"");
    }
    const std::string kind = inner.substr(0, space);
    std::string name = trim(inner.substr(space + 1));
    if (name.size() < 2 || name.front() != '"' || name.back() != '"')
        throw ParseError(line_no, "section name must be double-quoted in \"" + line + "\"");
    name = name.substr(1, name.size() - 2);
    if (name.empty())
        throw ParseError(line_no, "section name must be non-empty in \"" + line + "\"");
    if (name.find('"') != std::string::npos)
        throw ParseError(line_no, "section name must not contain quotes");
    if (kind != "asset" && kind != "oneoff" && kind != "option")
        throw ParseError(line_no, "unknown section \"" + kind + "\"");
    return {kind, name};
}

struct KeyValue {
    std::string key;
    std::string value;
};

KeyValue parse_key_value(const std::string& line, int line_no) {
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
        throw ParseError(line_no, "expected key = value, got \"" + line + "\"");
    KeyValue kv{trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
    if (kv.key.empty())
        throw ParseError(line_no, "missing key before '=' in \"" + line + "\"");
    if (kv.value.empty())
        throw ParseError(line_no, "missing value for key \"" + kv.key + "\"");
    return kv;
}

// `event "label" amount=18000 offset=4 period=30`
RecurringEvent parse_event_line(const std::string& line, int line_no) {
    std::size_t pos = line.find('"');
    if (pos == std::string::npos)
        throw ParseError(line_no, "event label must be double-quoted in \"" + line + "\"");
    const std::size_t close = line.find('"', pos + 1);
    if (close == std::string::npos)
        throw ParseError(line_no, "unterminated event label in \"" + line + "\"");

    RecurringEvent event;
    event.label = line.substr(pos + 1, close - pos - 1);
    if (event.label.empty())
        throw ParseError(line_no, "event label must be non-empty");

    std::istringstream rest(line.substr(close + 1));
    std::string token;
    bool have_amount = false, have_offset = false, have_period = false;
    while (rest >> token) {
        const std::size_t eq = token.find('=');
        if (eq == std::string::npos)
            throw ParseError(line_no, "expected key=value, got \"" + token + "\"");
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "amount") {
            event.amount = Money{static_cast<double>(parse_whole_pounds(value, line_no))};
            have_amount = true;
        } else if (key == "offset") {
            event.offset_years = parse_integer(value, line_no);
            have_offset = true;
        } else if (key == "period") {
            event.period_years = parse_integer(value, line_no);
            have_period = true;
        } else {
            throw ParseError(line_no, "unknown event key \"" + key + "\"");
        }
    }
    if (!have_amount || !have_offset || !have_period)
        throw ParseError(line_no, "event \"" + event.label +
                                      "\" needs amount, offset and period");
    if (event.amount < Money{0.0})
        throw ParseError(line_no, "event amount must be non-negative");
    if (event.offset_years < 0)
        throw ParseError(line_no, "event offset must be non-negative");
    if (event.period_years < 1)
        throw ParseError(line_no, "event period must be at least one year");
    return event;
}

struct ModelBuilder {
    std::map<std::string, std::pair<std::string, int>> model_keys;  // key -> (value, line)
    std::vector<AssetSchedule> assets;
    std::vector<OneOffEvent> oneoffs;
    std::vector<int> oneoff_lines;
    std::vector<OptionToggle> options;
    std::vector<int> option_lines;
    bool saw_model_section = false;

    std::string take_required(const std::string& key, int& line_out) {
        const auto it = model_keys.find(key);
        if (it == model_keys.end())
            throw ParseError(1, "[model] section is missing key \"" + key + "\"");
        line_out = it->second.second;
        return it->second.first;
    }

    std::optional<std::pair<std::string, int>> take_optional(const std::string& key) const {
        const auto it = model_keys.find(key);
        if (it == model_keys.end())
            return std::nullopt;
        return it->second;
    }
};

Money non_negative_pounds(const std::string& value, int line, const std::string& what) {
    const long long pounds = parse_whole_pounds(value, line);
    if (pounds < 0)
        throw ParseError(line, what + " must be non-negative, got " + value);
    return Money{static_cast<double>(pounds)};
}

Model finalize(ModelBuilder& builder) {
    if (!builder.saw_model_section)
        throw ParseError(1, "missing [model] section");

    static const std::set<std::string> known{
        "horizon_start", "horizon_end",  "opening_balance",  "inflation",
        "safety_balance", "income_central", "income_low_mult", "income_high_mult"};
    for (const auto& [key, value] : builder.model_keys)
        if (!known.contains(key))
            throw ParseError(value.second, "unknown key \"" + key + "\" in [model]");

    Model model;
    int line = 0;

    const Year start = parse_integer(builder.take_required("horizon_start", line), line);
    if (start < kYearMin || start > kYearMax)
        throw ParseError(line, "horizon_start must lie within [1900, 2200]");
    const int start_line = line;
    const Year end = parse_integer(builder.take_required("horizon_end", line), line);
    if (end < kYearMin || end > kYearMax)
        throw ParseError(line, "horizon_end must lie within [1900, 2200]");
    if (start > end)
        throw ParseError(start_line, "horizon_start exceeds horizon_end");
    model.horizon = Horizon{start, end};

    model.opening_balance = Money{
        static_cast<double>(parse_whole_pounds(builder.take_required("opening_balance", line), line))};
    model.inflation = parse_decimal(builder.take_required("inflation", line), line);
    if (model.inflation <= -1.0)
        throw ParseError(line, "inflation must exceed -1.0");
    model.safety_balance =
        non_negative_pounds(builder.take_required("safety_balance", line), line, "safety_balance");
    model.income_central =
        non_negative_pounds(builder.take_required("income_central", line), line, "income_central");

    if (const auto low = builder.take_optional("income_low_mult"))
        model.income_low_mult = parse_decimal(low->first, low->second);
    if (const auto high = builder.take_optional("income_high_mult"))
        model.income_high_mult = parse_decimal(high->first, high->second);
    if (!(model.income_low_mult <= 1.0 && 1.0 <= model.income_high_mult))
        throw ParseError(1, "income multipliers must satisfy low <= 1 <= high");

    model.assets = std::move(builder.assets);
    model.oneoffs = std::move(builder.oneoffs);
    model.options = std::move(builder.options);

    for (std::size_t i = 0; i < model.oneoffs.size(); ++i)
        if (!model.horizon.contains(model.oneoffs[i].year))
            throw ParseError(builder.oneoff_lines[i],
                             "one-off \"" + model.oneoffs[i].label + "\" year " +
                                 std::to_string(model.oneoffs[i].year) +
                                 " lies outside the horizon");
    for (std::size_t i = 0; i < model.options.size(); ++i)
        if (!model.horizon.contains(model.options[i].year))
            throw ParseError(builder.option_lines[i],
                             "option \"" + model.options[i].name + "\" year " +
                                 std::to_string(model.options[i].year) +
                                 " lies outside the horizon");

    try {
        model.validate();
    } catch (const std::invalid_argument& error) {
        throw ParseError(1, error.what());
    }
    return model;
}

}  // namespace

Model parse_model_file(std::string_view text) {
    const std::vector<std::string> lines = split_lines(text);

    ModelBuilder builder;
    enum class Section { None, ModelSection, Asset, OneOff, Option };
    Section section = Section::None;
    int section_line = 0;
    std::set<std::string> asset_names;
    std::set<std::string> option_names;
    // Per-section completeness tracking for oneoff/option blocks.
    bool have_amount = false, have_year = false, have_enabled = false;

    const auto close_section = [&]() {
        if (section == Section::OneOff && (!have_amount || !have_year))
            throw ParseError(section_line, "one-off section needs amount and year");
        if (section == Section::Option && (!have_amount || !have_year || !have_enabled))
            throw ParseError(section_line, "option section needs amount, year and enabled");
    };

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        const std::string line = trim(strip_comment(lines[i]));
        if (line.empty())
            continue;

        if (line.front() == '[') {
            close_section();
            const auto [kind, name] = parse_section_header(line, line_no);
            section_line = line_no;
            have_amount = have_year = have_enabled = false;
            if (kind == "model") {
                if (builder.saw_model_section)
                    throw ParseError(line_no, "duplicate [model] section");
                builder.saw_model_section = true;
                section = Section::ModelSection;
            } else if (kind == "asset") {
                if (!asset_names.insert(name).second)
                    throw ParseError(line_no, "duplicate asset name \"" + name + "\"");
                builder.assets.push_back(AssetSchedule{name, {}, Money{0.0}});
                section = Section::Asset;
            } else if (kind == "oneoff") {
                builder.oneoffs.push_back(OneOffEvent{name, Money{0.0}, kYearMin});
                builder.oneoff_lines.push_back(line_no);
                section = Section::OneOff;
            } else {
                if (!option_names.insert(name).second)
                    throw ParseError(line_no, "duplicate option name \"" + name + "\"");
                builder.options.push_back(OptionToggle{name, Money{0.0}, kYearMin, false});
                builder.option_lines.push_back(line_no);
                section = Section::Option;
            }
            continue;
        }

        switch (section) {
            case Section::None:
                throw ParseError(line_no, "content before any section: \"" + line + "\"");
            case Section::ModelSection: {
                const KeyValue kv = parse_key_value(line, line_no);
                if (!builder.model_keys.emplace(kv.key, std::make_pair(kv.value, line_no)).second)
                    throw ParseError(line_no, "duplicate key \"" + kv.key + "\" in [model]");
                break;
            }
            case Section::Asset: {
                if (line.rfind("event", 0) == 0) {
                    builder.assets.back().events.push_back(parse_event_line(line, line_no));
                    break;
                }
                const KeyValue kv = parse_key_value(line, line_no);
                if (kv.key == "market_value")
                    builder.assets.back().market_value =
                        non_negative_pounds(kv.value, line_no, "market_value");
                else
                    throw ParseError(line_no, "unknown key \"" + kv.key + "\" in [asset]");
                break;
            }
            case Section::OneOff: {
                const KeyValue kv = parse_key_value(line, line_no);
                if (kv.key == "amount") {
                    builder.oneoffs.back().amount =
                        non_negative_pounds(kv.value, line_no, "amount");
                    have_amount = true;
                } else if (kv.key == "year") {
                    builder.oneoffs.back().year = parse_integer(kv.value, line_no);
                    have_year = true;
                } else {
                    throw ParseError(line_no, "unknown key \"" + kv.key + "\" in [oneoff]");
                }
                break;
            }
            case Section::Option: {
                const KeyValue kv = parse_key_value(line, line_no);
                if (kv.key == "amount") {
                    builder.options.back().amount =
                        non_negative_pounds(kv.value, line_no, "amount");
                    have_amount = true;
                } else if (kv.key == "year") {
                    builder.options.back().year = parse_integer(kv.value, line_no);
                    have_year = true;
                } else if (kv.key == "enabled") {
                    builder.options.back().enabled = parse_bool(kv.value, line_no);
                    have_enabled = true;
                } else {
                    throw ParseError(line_no, "unknown key \"" + kv.key + "\" in [option]");
                }
                break;
            }
        }
    }
    close_section();

    return finalize(builder);
}

Model load_model_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open model file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_model_file(buffer.str());
}

std::string serialize_model(const Model& model) {
    std::ostringstream out;
    out << "[model]\n";
    out << "horizon_start = " << model.horizon.start << "\n";
    out << "horizon_end = " << model.horizon.end << "\n";
    out << "opening_balance = " << format_pounds(model.opening_balance) << "\n";
    out << "inflation = " << format_double(model.inflation) << "\n";
    out << "safety_balance = " << format_pounds(model.safety_balance) << "\n";
    out << "income_central = " << format_pounds(model.income_central) << "\n";
    out << "income_low_mult = " << format_double(model.income_low_mult) << "\n";
    out << "income_high_mult = " << format_double(model.income_high_mult) << "\n";

    for (const AssetSchedule& asset : model.assets) {
        out << "\n[asset \"" << asset.name << "\"]\n";
        if (asset.market_value > Money{0.0})
            out << "market_value = " << format_pounds(asset.market_value) << "\n";
        for (const RecurringEvent& event : asset.events)
            out << "event \"" << event.label << "\" amount=" << format_pounds(event.amount)
                << " offset=" << event.offset_years << " period=" << event.period_years << "\n";
    }
    for (const OneOffEvent& oneoff : model.oneoffs) {
        out << "\n[oneoff \"" << oneoff.label << "\"]\n";
        out << "amount = " << format_pounds(oneoff.amount) << "\n";
        out << "year = " << oneoff.year << "\n";
    }
    for (const OptionToggle& option : model.options) {
        out << "\n[option \"" << option.name << "\"]\n";
        out << "amount = " << format_pounds(option.amount) << "\n";
        out << "year = " << option.year << "\n";
        out << "enabled = " << (option.enabled ? "true" : "false") << "\n";
    }
    return out.str();
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(trim(line.substr(start)));
            break;
        }
        cells.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return cells;
}

}  // namespace

std::vector<BalanceSheetYear> parse_sheets_file(std::string_view text) {
    const std::vector<std::string> lines = split_lines(text);

    std::vector<BalanceSheetYear> sheets;
    bool have_header = false;
    std::set<std::string> seen_fields;

    using Field = Money BalanceSheetYear::*;
    static const std::map<std::string, Field> fields{
        {"tangible_assets", &BalanceSheetYear::tangible_assets},
        {"stock", &BalanceSheetYear::stock},
        {"debtors", &BalanceSheetYear::debtors},
        {"cash", &BalanceSheetYear::cash},
        {"creditors_one_year", &BalanceSheetYear::creditors_one_year},
        {"creditors_long", &BalanceSheetYear::creditors_long},
        {"ie_reserve", &BalanceSheetYear::ie_reserve},
        {"capital_reserve", &BalanceSheetYear::capital_reserve},
        {"shareholders_funds", &BalanceSheetYear::shareholders_funds}};

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        const std::string line = trim(strip_comment(lines[i]));
        if (line.empty())
            continue;
        const std::vector<std::string> cells = split_csv_row(line);

        if (!have_header) {
            if (cells.size() < 2 || cells[0] != "field")
                throw ParseError(line_no, "expected header \"field,<year>,...\"");
            std::set<Year> years;
            for (std::size_t c = 1; c < cells.size(); ++c) {
                const Year year = parse_integer(cells[c], line_no);
                if (year < kYearMin || year > kYearMax)
                    throw ParseError(line_no, "year " + cells[c] + " out of range [1900, 2200]");
                if (!years.insert(year).second)
                    throw ParseError(line_no, "duplicate year column " + cells[c]);
                BalanceSheetYear sheet;
                sheet.year = year;
                sheets.push_back(sheet);
            }
            have_header = true;
            continue;
        }

        if (cells.size() != sheets.size() + 1)
            throw ParseError(line_no, "row \"" + cells[0] + "\" has " +
                                          std::to_string(cells.size() - 1) + " cells, expected " +
                                          std::to_string(sheets.size()));
        const auto field = fields.find(cells[0]);
        if (field == fields.end())
            throw ParseError(line_no, "unknown field \"" + cells[0] + "\"");
        if (!seen_fields.insert(cells[0]).second)
            throw ParseError(line_no, "duplicate field \"" + cells[0] + "\"");

        for (std::size_t c = 1; c < cells.size(); ++c) {
            if (cells[c].empty())
                continue;  // absent figures stay 0
            sheets[c - 1].*(field->second) =
                Money{static_cast<double>(parse_whole_pounds(cells[c], line_no))};
        }
    }

    if (!have_header)
        throw ParseError(1, "missing header \"field,<year>,...\"");
    return sheets;
}

std::vector<BalanceSheetYear> load_sheets_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open sheets file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_sheets_file(buffer.str());
}

}  // namespace capplan
