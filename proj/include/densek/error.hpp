#ifndef DENSEK_ERROR_HPP
#define DENSEK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace densek {

/// Bad input data or a violated precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed edge-list text. Carries the offending 1-based line number.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// The exact oracle refuses instances above its enumeration cap.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Integer accumulator overflow (walk counts, rational arithmetic).
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// The simplex solver lost numerical control of its basis.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A solver handed back something that breaks its declared contract.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace densek

#endif
