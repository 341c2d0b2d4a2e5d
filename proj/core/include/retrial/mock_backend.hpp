#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "retrial/chat.hpp"
#include "retrial/config.hpp"

namespace retrial {

// Deterministic offline backend.
//
// scripted:  completions come from a FIFO queue; exhausting it is an error.
// bernoulli: with probability p the completion is "Answer: <witness>" where
//            the witness comes from `correct_answer`; otherwise
//            "Answer: <wrong_answer>". Draws are keyed on
//            (seed, sample_id, trial_index) so results are independent of
//            call arrival order under concurrency.
struct MockScript {
  using Mode = MockOptions::Mode;
  Mode mode = Mode::scripted;
  std::vector<std::string> queue;
  double success_probability = 1.0;
  TokenUsage per_call_usage{100, 100};
  std::uint64_t seed = 0;
  std::string wrong_answer = "0";
  std::function<std::optional<std::string>(const CallContext&)> correct_answer;

  void validate() const;  // throws std::invalid_argument
};

class MockBackend : public ChatBackend {
 public:
  explicit MockBackend(MockScript script);

  std::uint64_t calls() const;

  void on_resume(std::uint64_t consumed_calls) override;

 private:
  ChatResponse do_complete(const ChatRequest&, const CallContext&) override;

  std::string bernoulli_completion(const CallContext& ctx);

  mutable std::mutex mu_;
  MockScript script_;
  std::size_t queue_pos_ = 0;
  std::uint64_t calls_ = 0;
  // per-(sample, trial) draw streams
  std::unordered_map<std::string, Xoshiro256ssPtr> streams_;

  struct StreamBox;
  using Xoshiro256ssPtrAlias = void;
};

// Validates the script and returns a backend handle.
std::shared_ptr<MockBackend> configure_mock(MockScript script);

}  // namespace retrial
