#pragma once

#include <string>
#include <utility>

namespace retrial {

enum class Outcome { solved, unsolved };

// Result of verifying one extracted answer.
struct Verdict {
  Outcome outcome = Outcome::unsolved;
  std::string detail;           // failure reason when unsolved
  bool oracle_verified = false; // true when the verifier consulted the hidden answer

  bool solved() const { return outcome == Outcome::solved; }

  static Verdict ok() { return Verdict{Outcome::solved, "", false}; }
  static Verdict fail(std::string reason) {
    return Verdict{Outcome::unsolved, std::move(reason), false};
  }
};

}  // namespace retrial
