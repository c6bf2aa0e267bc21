#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tgaudin {

/// Name of the single indeterminate carried by a polynomial, rational
/// function or truncated series. Constants carry `none`.
enum class Var : std::uint8_t { none, u, v, y, x, q, eps };

constexpr std::string_view var_name(Var v) {
  switch (v) {
    case Var::none: return "";
    case Var::u: return "u";
    case Var::v: return "v";
    case Var::y: return "y";
    case Var::x: return "x";
    case Var::q: return "q";
    case Var::eps: return "eps";
  }
  return "?";
}

class VariableMismatch : public std::logic_error {
 public:
  VariableMismatch(Var a, Var b)
      : std::logic_error("arithmetic mixes indeterminates '" + std::string(var_name(a)) +
                         "' and '" + std::string(var_name(b)) + "'") {}
};

/// Common indeterminate of two operands; constants adopt the other side.
inline Var join_var(Var a, Var b) {
  if (a == Var::none) return b;
  if (b == Var::none || a == b) return a;
  throw VariableMismatch(a, b);
}

}  // namespace tgaudin
