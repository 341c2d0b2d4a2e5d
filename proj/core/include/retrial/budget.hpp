#pragma once

#include <mutex>

#include "retrial/money.hpp"

namespace retrial {

// Monetary cap on cumulative spend. Admission is strict (spent < limit),
// checked before an attempt starts; an attempt already in flight may
// complete and overshoot by its own cost.
struct Budget {
  MoneyUSD limit;
  MoneyUSD spent;

  bool exhausted() const { return spent >= limit; }
};

// True iff another attempt may start.
inline bool can_afford(const Budget& b) { return b.spent < b.limit; }

// Returns the budget with `amount` added to spent. Overspend is permitted;
// admission control is can_afford.
Budget charge(const Budget& b, MoneyUSD amount);

// The run's shared ledger view of the budget. charge/can_afford are atomic
// with respect to each other.
class SharedBudget {
 public:
  explicit SharedBudget(MoneyUSD limit) : budget_{limit, MoneyUSD::zero()} {}

  bool can_afford() const {
    std::lock_guard lock(mu_);
    return retrial::can_afford(budget_);
  }

  void charge(MoneyUSD amount) {
    std::lock_guard lock(mu_);
    budget_ = retrial::charge(budget_, amount);
  }

  Budget snapshot() const {
    std::lock_guard lock(mu_);
    return budget_;
  }

  MoneyUSD spent() const { return snapshot().spent; }

 private:
  mutable std::mutex mu_;
  Budget budget_;
};

}  // namespace retrial
