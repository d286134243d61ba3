// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <charconv>
#include <string>

#include "capplan/money_time.hpp"

namespace capplan {

/// Shortest decimal string that round-trips the double exactly.
inline std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

/// Whole pounds, half away from zero.
inline std::string format_pounds(Money amount) {
    return std::to_string(amount.rounded_pounds());
}

}  // namespace capplan
