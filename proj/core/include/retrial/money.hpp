#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace retrial {

// Non-negative US-dollar amount in fixed-point decimal with 12 fractional
// digits. All ledger arithmetic is exact; binary floating point is never
// used for money.
class MoneyUSD {
 public:
  static constexpr std::int64_t kScale = 1'000'000'000'000;  // 10^12

  constexpr MoneyUSD() = default;

  // `units` are 10^-12 dollars. Throws std::invalid_argument on negative.
  static MoneyUSD from_units(std::int64_t units);

  // Parses "1", "0.15", "12.5". At most 12 fractional digits; no sign.
  static MoneyUSD parse(std::string_view text);

  static constexpr MoneyUSD zero() { return MoneyUSD(); }
  // Largest representable amount; stands in for "unlimited" budgets.
  static MoneyUSD max();

  std::int64_t units() const { return units_; }
  bool is_zero() const { return units_ == 0; }

  // Always renders exactly 12 fractional digits, e.g. "0.000045000000".
  std::string to_string() const;

  MoneyUSD operator+(MoneyUSD other) const;
  MoneyUSD& operator+=(MoneyUSD other);

  friend auto operator<=>(MoneyUSD, MoneyUSD) = default;

 private:
  std::int64_t units_ = 0;
};

}  // namespace retrial
