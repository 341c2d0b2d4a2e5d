#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>

#include "retrial/config.hpp"

namespace retrial {

struct Game24Puzzle {
  std::array<int, 4> numbers;
};

// One program-synthesis task: signature + docstring, the function to
// implement, and an executable check program referencing only that entry
// point.
struct CodeTask {
  std::string prompt;
  std::string entry_point;
  std::string tests;
};

struct HotpotQuestion {
  std::string question;
  std::string oracle_answer;
};

// One benchmark instance plus its verification payload.
struct Sample {
  std::string id;
  Task task = Task::game24;
  std::uint64_t source_index = 0;
  std::variant<Game24Puzzle, CodeTask, HotpotQuestion> payload;

  const Game24Puzzle& game24() const { return std::get<Game24Puzzle>(payload); }
  const CodeTask& code() const { return std::get<CodeTask>(payload); }
  const HotpotQuestion& hotpot() const {
    return std::get<HotpotQuestion>(payload);
  }

  // Text substituted into prompt templates as {input}.
  std::string input_text() const;
};

Sample make_game24_sample(std::uint64_t source_index,
                          const std::array<int, 4>& numbers);
Sample make_code_sample(std::string id, std::uint64_t source_index,
                        CodeTask task);
Sample make_hotpot_sample(std::uint64_t source_index, HotpotQuestion q);

}  // namespace retrial
