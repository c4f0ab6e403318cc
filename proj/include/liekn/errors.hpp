#pragma once

#include <stdexcept>
#include <string>

namespace liekn {

/// Shapes of the arguments do not fit together.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (rationals, documents).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A hypothesis of an operation does not hold. `hypothesis` names it.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(std::string hypothesis, const std::string& detail)
        : std::runtime_error(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)), detail_(detail) {}

    const std::string& hypothesis() const noexcept { return hypothesis_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string hypothesis_;
    std::string detail_;
};

/// Search space larger than the configured cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No catalog entry, bundle or kind with the requested name.
class UnknownName : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

} // namespace liekn
