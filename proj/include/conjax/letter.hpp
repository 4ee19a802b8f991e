#pragma once

#include <cstdint>
#include <optional>

namespace conjax {

// Generator alphabet of the rank-2 free group. Surface form: 'x','y','X','Y'
// with the upper-case letters denoting inverses.
enum class Letter : std::uint8_t { x = 0, y = 1, X = 2, Y = 3 };

inline Letter inverse(Letter l) {
  return Letter(static_cast<std::uint8_t>(l) ^ 2u);
}

inline char to_char(Letter l) {
  static constexpr char table[4] = {'x', 'y', 'X', 'Y'};
  return table[static_cast<std::uint8_t>(l)];
}

inline std::optional<Letter> letter_from_char(char c) {
  switch (c) {
    case 'x': return Letter::x;
    case 'y': return Letter::y;
    case 'X': return Letter::X;
    case 'Y': return Letter::Y;
    default: return std::nullopt;
  }
}

}  // namespace conjax
