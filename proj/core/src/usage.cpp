#include "retrial/usage.hpp"

#include <limits>
#include <stdexcept>

namespace retrial {

namespace {
constexpr std::int64_t kTokensPerPrice = 1'000'000;

void check_price(const MoneyUSD& price, const std::string& model_id) {
  if (price.units() % kTokensPerPrice != 0) {
    throw std::invalid_argument(
        "price for " + model_id +
        " has more than 6 fractional digits; per-token cost would not be "
        "exactly representable");
  }
}

MoneyUSD tokens_cost(std::uint64_t tokens, const MoneyUSD& price_per_million) {
  // price is divisible by 10^6, so the per-token rate is an exact unit count.
  std::int64_t per_token = price_per_million.units() / kTokensPerPrice;
  __int128 total = static_cast<__int128>(tokens) * per_token;
  if (total > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("token cost overflow");
  }
  return MoneyUSD::from_units(static_cast<std::int64_t>(total));
}
}  // namespace

CostModel CostModel::make(std::string model_id, MoneyUSD prompt_price,
                          MoneyUSD completion_price) {
  check_price(prompt_price, model_id);
  check_price(completion_price, model_id);
  return CostModel{std::move(model_id), prompt_price, completion_price};
}

CostModel CostModel::gpt4o_mini() {
  return make("gpt-4o-mini", MoneyUSD::parse("0.15"), MoneyUSD::parse("0.60"));
}

CostModel CostModel::llama33_70b() {
  return make("llama-3.3-70b", MoneyUSD::parse("0.88"),
              MoneyUSD::parse("0.88"));
}

MoneyUSD cost_of(const TokenUsage& usage, const CostModel& model) {
  check_price(model.prompt_price_per_million, model.model_id);
  check_price(model.completion_price_per_million, model.model_id);
  return tokens_cost(usage.prompt_tokens, model.prompt_price_per_million) +
         tokens_cost(usage.completion_tokens,
                     model.completion_price_per_million);
}

}  // namespace retrial
