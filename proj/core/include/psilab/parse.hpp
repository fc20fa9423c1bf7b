#pragma once

#include "psilab/polynomial.hpp"

#include <optional>
#include <string>

namespace psilab {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text syntax: "3*x1^2*x3 - 1/2*x2*x4"; dual: "y1^(2)*y3".
// Without n the variable count is the largest index seen.
Polynomial parse_polynomial(const std::string& text, std::optional<std::size_t> n = std::nullopt);
DualElement parse_dual(const std::string& text, std::optional<std::size_t> n = std::nullopt);

std::string format(const Polynomial& f);
std::string format(const DualElement& g);

}  // namespace psilab
