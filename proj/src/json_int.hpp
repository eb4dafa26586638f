#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "kschur/errors.hpp"
#include "kschur/integer.hpp"

namespace kschur::detail {

/// Integers that fit in int64 are written as JSON numbers, larger ones as
/// decimal strings. Both forms are accepted on input.
inline nlohmann::json int_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline Integer int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty()) throw ParseError("empty integer string");
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])) && !(i == 0 && s[i] == '-'))
        throw ParseError("malformed integer string '" + s + "'");
    return Integer(s);
  }
  throw ParseError("expected an integer, got " + j.dump());
}

}  // namespace kschur::detail
