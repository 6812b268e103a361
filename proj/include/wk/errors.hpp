#pragma once

#include <stdexcept>
#include <string>

namespace wk {

/// Two series built over different variable contexts were combined.
class ContextMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A variable name is not part of the series' context.
class UnknownVariable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The caller asked for data beyond the order that was computed.
class TruncationExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Correlators are only supported with one, two or three insertions.
class UnsupportedArity : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The three-point linear system has no solution.
class OdeInconsistent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The three-point linear system has more than one solution.
class OdeUnderdetermined : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace wk
