#pragma once

#include <cstdint>

namespace alia {

/// ALIA_SEED when set to an unsigned integer, else `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback);

}  // namespace alia
