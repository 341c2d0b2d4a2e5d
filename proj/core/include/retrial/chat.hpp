#pragma once

#include <atomic>
#include <string>
#include <vector>

#include "retrial/usage.hpp"

namespace retrial {

enum class Role { system, user, assistant };

std::string to_string(Role r);

struct ChatMessage {
  Role role = Role::user;
  std::string text;
};

struct ChatRequest {
  std::vector<ChatMessage> messages;
  double temperature = 1.0;
  int max_completion_tokens = 1000;
  int n_samples = 1;

  void validate() const;  // throws std::invalid_argument

  // Human-readable rendering used for transcripts and the no-feedback
  // prompt-identity checks.
  std::string render() const;
};

struct ChatResponse {
  std::vector<std::string> completions;  // length == n_samples on success
  TokenUsage usage;                      // aggregate over the call
};

// Identifies the attempt a call belongs to. The mock backend keys its
// random streams on (seed, sample_id, trial_index) so that completions do
// not depend on cross-sample call arrival order.
struct CallContext {
  std::string sample_id;
  int trial_index = 1;
};

// Monotone in-process token totals; every completed call is added before
// complete() returns.
class UsageLedger {
 public:
  void add(const TokenUsage& u) {
    prompt_.fetch_add(u.prompt_tokens, std::memory_order_relaxed);
    completion_.fetch_add(u.completion_tokens, std::memory_order_relaxed);
  }
  TokenUsage totals() const {
    return {prompt_.load(std::memory_order_relaxed),
            completion_.load(std::memory_order_relaxed)};
  }

 private:
  std::atomic<std::uint64_t> prompt_{0};
  std::atomic<std::uint64_t> completion_{0};
};

// Uniform chat-completion interface. Implementations must be safely
// shareable across concurrent attempt workers.
class ChatBackend {
 public:
  virtual ~ChatBackend() = default;

  ChatResponse complete(const ChatRequest& request, const CallContext& ctx) {
    request.validate();
    ChatResponse response = do_complete(request, ctx);
    ledger_.add(response.usage);
    return response;
  }

  const UsageLedger& usage_ledger() const { return ledger_; }

  // Called when a run is resumed with this backend; `consumed_calls` is the
  // number of backend calls recorded by replayed attempts.
  virtual void on_resume(std::uint64_t consumed_calls) { (void)consumed_calls; }

 private:
  virtual ChatResponse do_complete(const ChatRequest&, const CallContext&) = 0;

  UsageLedger ledger_;
};

}  // namespace retrial
