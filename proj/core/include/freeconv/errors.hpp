#pragma once

#include <stdexcept>
#include <string>

namespace freeconv {

// Input outside an operation's mathematical domain (t >= 0, alpha in (0,1), ...).
// The message names the violated constraint.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// The requested quantity is not computable from the measure's representation
// (e.g. CDF of a transform-defined measure).
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// Root bracketing / monotone inversion failed (no sign change, or a probe
// detected non-monotone data where monotone data was promised).
class BracketError : public std::runtime_error {
public:
    explicit BracketError(const std::string& what) : std::runtime_error(what) {}
};

// Oracle iteration failed to converge; the message carries the iteration trace.
class OracleError : public std::runtime_error {
public:
    explicit OracleError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace freeconv
