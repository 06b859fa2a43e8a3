#pragma once

#include "weyl/weyl_element.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weyl {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, size_t pos)
      : std::runtime_error(message), position(pos) {}
  size_t position;
};

/// Parse the surface syntax for Weyl elements:
///   rational literals, variables x<i>/d<i> (plain x/d when n = 1),
///   '^' non-negative integer powers, '*' within a normal-ordered monomial
///   (all x factors before all d factors), '+'/'-' linear combination,
///   '@' composition, parentheses.
/// When n is omitted it is inferred from the highest variable index.
WeylElement parse_element(std::string_view text, std::optional<int> n = std::nullopt);

/// Highest variable index mentioned (1 when only plain x/d or no variables).
int infer_arity(std::string_view text);

/// Canonical text form, e.g. "1 + x*d" or "3*x1^2*d1 - 1/2*x2*d2^3".
/// parse_element(format_element(X), X.arity()) == X.
std::string format_element(const WeylElement& x);

}  // namespace weyl
