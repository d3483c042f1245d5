#pragma once

#include <stdexcept>

namespace dads {

/// Math-domain violation: nonprime modulus, division by zero, shape or
/// truncation-bound errors. CLI maps this to exit code 4.
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or schema-invalid input. CLI maps this to exit code 3.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dads
