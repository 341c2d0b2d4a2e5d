#include "retrial/rng.hpp"

#include <cstdio>
#include <string>

namespace retrial {

std::string fnv1a64_hex(std::string_view data) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(data)));
  return buf;
}

}  // namespace retrial
