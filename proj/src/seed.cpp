#include "alia/seed.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace alia {

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("ALIA_SEED");
  if (!env) return fallback;
  std::uint64_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || ptr == env) return fallback;
  return value;
}

}  // namespace alia
