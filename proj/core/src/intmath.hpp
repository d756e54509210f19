#pragma once

#include <cstdint>

namespace wheel6::detail {

// floor(num / den) and ceil(num / den) for den > 0.
constexpr std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  const std::int64_t q = num / den;
  return (num % den != 0 && num < 0) ? q - 1 : q;
}

constexpr std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  const std::int64_t q = num / den;
  return (num % den != 0 && num > 0) ? q + 1 : q;
}

static_assert(floor_div(-5, 5) == -1 && floor_div(-4, 5) == -1 && floor_div(4, 5) == 0);
static_assert(ceil_div(9, 7) == 2 && ceil_div(7, 7) == 1 && ceil_div(0, 7) == 0);

}  // namespace wheel6::detail
