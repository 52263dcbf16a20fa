#ifndef LEIBNIZ_ERRORS_HPP
#define LEIBNIZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leibniz {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input: mixed fields, dimension mismatches,
/// bad files, quotients by non-ideals. CLI maps these to exit code 2.
class InputError : public Error {
public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// A mathematical precondition of an operation does not hold (e.g. asking
/// for a non-perfectness witness of a perfect algebra). CLI maps these to
/// exit code 1; verifiers map them to a hypothesis_unmet verdict.
class HypothesisError : public Error {
public:
  explicit HypothesisError(const std::string& what) : Error(what) {}
};

/// A property that is a theorem failed to certify at runtime. Signals an
/// implementation bug, never a property of valid input.
class InternalError : public Error {
public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

} // namespace leibniz

#endif
