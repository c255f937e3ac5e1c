#ifndef LEIBNIZ_ERRORS_HPP
#define LEIBNIZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leibniz {

/// Operand shapes that do not fit together (vector lengths, column counts, ambient dims).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A 1-based basis index outside 1..dim.
struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Family parameters that violate the family's constraints.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operation called on an input it is not defined for (non-filiform, non-Leibniz, ...).
struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Malformed textual input: rationals, family specs, algebra documents.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace leibniz

#endif
