#include "retrial/budget.hpp"

namespace retrial {

Budget charge(const Budget& b, MoneyUSD amount) {
  return Budget{b.limit, b.spent + amount};
}

}  // namespace retrial
