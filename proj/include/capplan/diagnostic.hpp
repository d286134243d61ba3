// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace capplan {

enum class Severity { Warning, Error };

constexpr std::string_view to_string(Severity s) {
    return s == Severity::Warning ? "warning" : "error";
}

/// A named value quoted by a diagnostic (an amount in pounds or a rate).
struct Citation {
    std::string name;
    double value;

    bool operator==(const Citation&) const = default;
};

/// One audit finding. Rule ids are stable across releases; messages are
/// deterministic for identical inputs.
struct Diagnostic {
    std::string rule;
    Severity severity;
    std::string message;
    std::vector<Citation> citations;

    bool operator==(const Diagnostic&) const = default;
};

}  // namespace capplan
