#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "retrial/money.hpp"
#include "retrial/usage.hpp"

namespace retrial {

enum class Task { game24, humaneval, hotpotqa };
enum class Method { io, cot, tot, reflexion };
enum class BackendKind { mock, http };

std::string to_string(Task t);
std::string to_string(Method m);
std::string to_string(BackendKind b);
Task parse_task(std::string_view s);
Method parse_method(std::string_view s);
BackendKind parse_backend_kind(std::string_view s);

struct ToTOptions {
  int proposals_k = 5;  // children requested per expansion
  int beam_b = 5;       // nodes kept per level
  int depth_d = 3;      // levels; three combination steps for game24
};

struct ReflexionOptions {
  int max_inner = 2;
  // Reflections are discarded at every retrial boundary by default; the
  // carry-over variant is available as an explicit switch.
  bool persist_across_trials = false;
};

struct StrategyOptions {
  int n_samples = 1;
  int max_completion_tokens = 1000;
  int max_tool_steps = 6;  // hotpotqa Search/Lookup loop cap per generation
  ToTOptions tot;
  ReflexionOptions reflexion;
};

struct MockOptions {
  enum class Mode { scripted, bernoulli };
  Mode mode = Mode::bernoulli;
  double success_probability = 1.0;
  TokenUsage per_call_usage{100, 100};
  std::vector<std::string> script;  // scripted completions, consumed FIFO
  std::string wrong_answer = "0";
};

struct HttpOptions {
  std::string base_url_env = "RETRIAL_BASE_URL";
  std::string api_key_env = "OPENAI_API_KEY";
  int timeout_seconds = 120;
  int max_retries = 5;
};

// Everything that determines a run's behavior. With the mock backend the
// pair (config, seed) fully determines the RunReport.
struct RunConfig {
  Task task = Task::game24;
  Method method = Method::cot;
  double temperature = 1.0;
  MoneyUSD budget_limit = MoneyUSD::max();
  std::uint64_t max_trials = 0;  // 0 = unbounded
  std::uint64_t seed = 0;
  CostModel cost_model = CostModel::gpt4o_mini();
  BackendKind backend = BackendKind::mock;
  int concurrency = 1;
  StrategyOptions strategy;
  MockOptions mock;
  HttpOptions http;

  void validate() const;  // throws ConfigError
};

}  // namespace retrial
