#include "retrial/config.hpp"

#include "retrial/errors.hpp"

namespace retrial {

std::string to_string(Task t) {
  switch (t) {
    case Task::game24: return "game24";
    case Task::humaneval: return "humaneval";
    case Task::hotpotqa: return "hotpotqa";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::io: return "io";
    case Method::cot: return "cot";
    case Method::tot: return "tot";
    case Method::reflexion: return "reflexion";
  }
  return "?";
}

std::string to_string(BackendKind b) {
  return b == BackendKind::mock ? "mock" : "http";
}

Task parse_task(std::string_view s) {
  if (s == "game24") return Task::game24;
  if (s == "humaneval") return Task::humaneval;
  if (s == "hotpotqa") return Task::hotpotqa;
  throw ConfigError("unknown task: " + std::string(s));
}

Method parse_method(std::string_view s) {
  if (s == "io") return Method::io;
  if (s == "cot") return Method::cot;
  if (s == "tot") return Method::tot;
  if (s == "reflexion") return Method::reflexion;
  throw ConfigError("unknown method: " + std::string(s));
}

BackendKind parse_backend_kind(std::string_view s) {
  if (s == "mock") return BackendKind::mock;
  if (s == "http") return BackendKind::http;
  throw ConfigError("unknown backend: " + std::string(s));
}

void RunConfig::validate() const {
  if (temperature < 0.0 || temperature > 2.0) {
    throw ConfigError("temperature must be in [0, 2]");
  }
  if (concurrency < 1) {
    throw ConfigError("concurrency must be >= 1");
  }
  if (strategy.n_samples < 1 || strategy.max_completion_tokens < 1) {
    throw ConfigError("n_samples and max_completion_tokens must be positive");
  }
  if (strategy.tot.proposals_k < 1 || strategy.tot.beam_b < 1 ||
      strategy.tot.depth_d < 1) {
    throw ConfigError("tot proposals/beam/depth must be >= 1");
  }
  if (strategy.reflexion.max_inner < 1) {
    throw ConfigError("reflexion max_inner must be >= 1");
  }
  if (backend == BackendKind::mock) {
    if (mock.success_probability < 0.0 || mock.success_probability > 1.0) {
      throw ConfigError("mock success_probability must be in [0, 1]");
    }
  }
}

}  // namespace retrial
