#pragma once

#include <cstdint>
#include <string>

#include "retrial/money.hpp"

namespace retrial {

// Token counts as reported by the backend. Never re-tokenized locally.
struct TokenUsage {
  std::uint64_t prompt_tokens = 0;
  std::uint64_t completion_tokens = 0;

  TokenUsage operator+(const TokenUsage& o) const {
    return {prompt_tokens + o.prompt_tokens,
            completion_tokens + o.completion_tokens};
  }
  TokenUsage& operator+=(const TokenUsage& o) {
    prompt_tokens += o.prompt_tokens;
    completion_tokens += o.completion_tokens;
    return *this;
  }
  friend bool operator==(const TokenUsage&, const TokenUsage&) = default;
};

// Per-million-token snapshot prices for one model.
//
// Prices are constrained to at most 6 fractional digits so that the
// per-token rate is itself an exact 12-digit fixed-point amount; cost_of
// is then exactly linear in the token counts.
struct CostModel {
  std::string model_id;
  MoneyUSD prompt_price_per_million;
  MoneyUSD completion_price_per_million;

  static CostModel make(std::string model_id, MoneyUSD prompt_price,
                        MoneyUSD completion_price);

  // Published snapshot prices (USD per 1M tokens).
  static CostModel gpt4o_mini();    // 0.15 prompt / 0.60 completion
  static CostModel llama33_70b();   // 0.88 prompt / 0.88 completion
};

// prompt_tokens * prompt_price/10^6 + completion_tokens * completion_price/10^6,
// computed exactly.
MoneyUSD cost_of(const TokenUsage& usage, const CostModel& model);

}  // namespace retrial
