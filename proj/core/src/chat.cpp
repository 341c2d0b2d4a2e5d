#include "retrial/chat.hpp"

#include <stdexcept>

namespace retrial {

std::string to_string(Role r) {
  switch (r) {
    case Role::system: return "system";
    case Role::user: return "user";
    case Role::assistant: return "assistant";
  }
  return "?";
}

void ChatRequest::validate() const {
  if (messages.empty()) {
    throw std::invalid_argument("chat request has no messages");
  }
  if (messages.front().role == Role::assistant) {
    throw std::invalid_argument("first message role must be system or user");
  }
  if (n_samples < 1) {
    throw std::invalid_argument("n_samples must be positive");
  }
  if (max_completion_tokens < 1) {
    throw std::invalid_argument("max_completion_tokens must be positive");
  }
}

std::string ChatRequest::render() const {
  std::string out;
  for (const auto& m : messages) {
    out += "[" + to_string(m.role) + "]\n";
    out += m.text;
    if (out.empty() || out.back() != '\n') out += '\n';
  }
  return out;
}

}  // namespace retrial
