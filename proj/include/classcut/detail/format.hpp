#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace classcut::detail {

// Shortest representation that round-trips the exact double.
inline std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string format_fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

} // namespace classcut::detail
