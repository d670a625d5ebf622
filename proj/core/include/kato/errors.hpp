#pragma once

#include <stdexcept>
#include <string>

namespace kato {

// Thrown when an argument is outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// |grad |grad u|| vanishes: the Kato ratio is undefined (the inequality holds
// trivially at such points).
class degenerate_gradient_error : public std::runtime_error {
public:
  explicit degenerate_gradient_error(const std::string& what)
      : std::runtime_error(what) {}
};

// p == n makes the radial power map constant.
class constant_exponent_error : public domain_error {
public:
  explicit constant_exponent_error(const std::string& what) : domain_error(what) {}
};

// No real null direction: the quadratic form discriminant is not zero.
class no_null_direction_error : public std::runtime_error {
public:
  explicit no_null_direction_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace kato
