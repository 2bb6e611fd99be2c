#pragma once

#include <stdexcept>
#include <string>

namespace gssa {

/// Malformed user input: bad JSON, out-of-range vertex ids, empty encoding, ...
struct invalid_input : std::invalid_argument {
  explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

/// A documented size bound was exceeded (graph cap, enumeration bound,
/// simulation bound).
struct limit_exceeded : std::runtime_error {
  explicit limit_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency violation. The two witness searches are an exact
/// dichotomy; if both or neither produce a witness, or a returned witness
/// fails its own defining equations, that is a bug, never a user error.
struct consistency_violation : std::logic_error {
  explicit consistency_violation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gssa
