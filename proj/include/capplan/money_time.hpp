// SPDX-License-Identifier: Apache-2.0
//
// Money, time and rate conventions shared by the whole library.
//
// Amounts are pounds sterling carried as doubles and are never rounded
// internally; rounding to whole pounds (half away from zero) happens only
// when a value is presented. Rates are per-annum fractions (0.02 == 2%).

#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace capplan {

using Year = int;
using Rate = double;

inline constexpr Year kYearMin = 1900;
inline constexpr Year kYearMax = 2200;

namespace detail {

inline void require(bool condition, const std::string& message) {
    if (!condition)
        throw std::invalid_argument(message);
}

}  // namespace detail

/// Pounds sterling. Wraps a double so amounts and rates cannot be mixed up.
class Money {
  public:
    constexpr Money() = default;
    constexpr explicit Money(double pounds) : pounds_(pounds) {}

    [[nodiscard]] constexpr double pounds() const noexcept { return pounds_; }
    [[nodiscard]] bool finite() const noexcept { return std::isfinite(pounds_); }

    /// Presentation rounding: half away from zero, whole pounds.
    [[nodiscard]] long long rounded_pounds() const {
        detail::require(finite(), "Money value is not finite");
        return std::llround(pounds_);
    }

    constexpr Money operator-() const { return Money{-pounds_}; }
    constexpr Money& operator+=(Money rhs) {
        pounds_ += rhs.pounds_;
        return *this;
    }
    constexpr Money& operator-=(Money rhs) {
        pounds_ -= rhs.pounds_;
        return *this;
    }
    constexpr Money& operator*=(double k) {
        pounds_ *= k;
        return *this;
    }

    friend constexpr Money operator+(Money a, Money b) { return Money{a.pounds_ + b.pounds_}; }
    friend constexpr Money operator-(Money a, Money b) { return Money{a.pounds_ - b.pounds_}; }
    friend constexpr Money operator*(Money m, double k) { return Money{m.pounds_ * k}; }
    friend constexpr Money operator*(double k, Money m) { return Money{k * m.pounds_}; }
    friend constexpr Money operator/(Money m, double k) { return Money{m.pounds_ / k}; }
    /// Ratio of two amounts; dimensionless.
    friend constexpr double operator/(Money a, Money b) { return a.pounds_ / b.pounds_; }

    constexpr auto operator<=>(const Money&) const = default;

  private:
    double pounds_ = 0.0;
};

constexpr Money abs(Money m) { return m.pounds() < 0.0 ? -m : m; }

/// Whether a series is expressed in the purchasing power of the horizon
/// start year or in money of the day.
enum class MoneyConvention { BaseYearReal, Nominal };

constexpr std::string_view to_string(MoneyConvention c) {
    return c == MoneyConvention::BaseYearReal ? "base-year real" : "nominal";
}

/// Inclusive run of calendar years.
struct Horizon {
    Year start = kYearMin;
    Year end = kYearMin;

    void validate() const {
        detail::require(start >= kYearMin && end <= kYearMax,
                        "horizon years must lie within [1900, 2200]");
        detail::require(start <= end, "horizon start must not exceed its end");
    }

    [[nodiscard]] constexpr int length() const noexcept { return end - start + 1; }
    [[nodiscard]] constexpr bool contains(Year y) const noexcept { return y >= start && y <= end; }
    [[nodiscard]] constexpr int index_of(Year y) const noexcept { return y - start; }

    constexpr auto operator<=>(const Horizon&) const = default;
};

/// (1 + rate)^years. Growing a base-year amount forward `years` years.
inline double growth_factor(Rate rate, int years) {
    detail::require(rate > -1.0, "rate must exceed -100%");
    detail::require(years >= 0, "growth_factor rejects negative year counts");
    return std::pow(1.0 + rate, years);
}

/// 1 / (1 + rate)^years. The conventional present-value factor.
inline double discount_factor(Rate rate, int years) {
    return 1.0 / growth_factor(rate, years);
}

/// Exact Fisher relation: (1 + real) = (1 + nominal) / (1 + inflation).
inline Rate real_rate(Rate nominal, Rate inflation) {
    detail::require(nominal > -1.0 && inflation > -1.0, "rates must exceed -100%");
    return (1.0 + nominal) / (1.0 + inflation) - 1.0;
}

/// Inverse of real_rate.
inline Rate nominal_rate(Rate real, Rate inflation) {
    detail::require(real > -1.0 && inflation > -1.0, "rates must exceed -100%");
    return (1.0 + real) * (1.0 + inflation) - 1.0;
}

/// Compound per-annum rate taking `start` to `end` over `years` years.
inline Rate annualized_growth(Money start, Money end, int years) {
    detail::require(start > Money{0.0}, "annualized_growth requires a positive start amount");
    detail::require(end > Money{0.0}, "annualized_growth requires a positive end amount");
    detail::require(years >= 1, "annualized_growth requires at least one year");
    return std::pow(end / start, 1.0 / years) - 1.0;
}

}  // namespace capplan
