#include "retrial/money.hpp"

#include <cstdio>
#include <limits>
#include <stdexcept>

namespace retrial {

MoneyUSD MoneyUSD::from_units(std::int64_t units) {
  if (units < 0) {
    throw std::invalid_argument("MoneyUSD cannot be negative");
  }
  MoneyUSD m;
  m.units_ = units;
  return m;
}

MoneyUSD MoneyUSD::max() {
  return from_units(std::numeric_limits<std::int64_t>::max());
}

MoneyUSD MoneyUSD::parse(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty money literal");
  }
  std::size_t i = 0;
  std::int64_t whole = 0;
  bool any_digit = false;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    int d = text[i] - '0';
    if (whole > (std::numeric_limits<std::int64_t>::max() - d) / 10) {
      throw std::invalid_argument("money literal out of range");
    }
    whole = whole * 10 + d;
    any_digit = true;
    ++i;
  }
  std::int64_t frac = 0;
  int frac_digits = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      if (frac_digits == 12) {
        throw std::invalid_argument(
            "money literal has more than 12 fractional digits");
      }
      frac = frac * 10 + (text[i] - '0');
      ++frac_digits;
      any_digit = true;
      ++i;
    }
  }
  if (!any_digit || i != text.size()) {
    throw std::invalid_argument("malformed money literal: " +
                                std::string(text));
  }
  for (int k = frac_digits; k < 12; ++k) frac *= 10;
  if (whole > std::numeric_limits<std::int64_t>::max() / kScale) {
    throw std::invalid_argument("money literal out of range");
  }
  std::int64_t units = whole * kScale;
  if (units > std::numeric_limits<std::int64_t>::max() - frac) {
    throw std::invalid_argument("money literal out of range");
  }
  return from_units(units + frac);
}

std::string MoneyUSD::to_string() const {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%lld.%012lld",
                static_cast<long long>(units_ / kScale),
                static_cast<long long>(units_ % kScale));
  return buf;
}

MoneyUSD MoneyUSD::operator+(MoneyUSD other) const {
  std::int64_t out = 0;
  if (__builtin_add_overflow(units_, other.units_, &out)) {
    throw std::overflow_error("MoneyUSD addition overflow");
  }
  return from_units(out);
}

MoneyUSD& MoneyUSD::operator+=(MoneyUSD other) {
  *this = *this + other;
  return *this;
}

}  // namespace retrial
