#include "orbdiam/caps.hpp"

#include <cstdlib>
#include <string>

#include "orbdiam/errors.hpp"

namespace orbdiam {

Caps Caps::from_environment() {
  Caps caps;
  if (const char* env = std::getenv("ORBDIAM_MAX_V"); env && *env) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used != std::string(env).size() || value == 0) throw std::invalid_argument(env);
      caps.max_v = value;
    } catch (const std::exception&) {
      throw InvalidInput(std::string("ORBDIAM_MAX_V is not a positive integer: ") + env);
    }
  }
  return caps;
}

}  // namespace orbdiam
