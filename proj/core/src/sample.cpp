#include "retrial/sample.hpp"

#include <cstdio>

namespace retrial {

std::string Sample::input_text() const {
  switch (task) {
    case Task::game24: {
      const auto& n = game24().numbers;
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%d %d %d %d", n[0], n[1], n[2], n[3]);
      return buf;
    }
    case Task::humaneval:
      return code().prompt;
    case Task::hotpotqa:
      return hotpot().question;
  }
  return {};
}

Sample make_game24_sample(std::uint64_t source_index,
                          const std::array<int, 4>& numbers) {
  char id[32];
  std::snprintf(id, sizeof(id), "game24-%06llu",
                static_cast<unsigned long long>(source_index));
  return Sample{id, Task::game24, source_index, Game24Puzzle{numbers}};
}

Sample make_code_sample(std::string id, std::uint64_t source_index,
                        CodeTask task) {
  return Sample{std::move(id), Task::humaneval, source_index, std::move(task)};
}

Sample make_hotpot_sample(std::uint64_t source_index, HotpotQuestion q) {
  char id[32];
  std::snprintf(id, sizeof(id), "hotpotqa-%06llu",
                static_cast<unsigned long long>(source_index));
  return Sample{id, Task::hotpotqa, source_index, std::move(q)};
}

}  // namespace retrial
