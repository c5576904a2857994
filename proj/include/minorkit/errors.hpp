#ifndef MINORKIT_ERRORS_HPP
#define MINORKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace minorkit {

/// Malformed input: unknown vertex ids, loops, wrong sides, bad parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input that violates an operation's precondition
/// (for example contracting a disconnected set).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exhaustive routine refused an instance beyond its size guard.
class RefusedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The game lemma solver exhausted every path choice without finding J.
class LemmaViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace minorkit

#endif  // MINORKIT_ERRORS_HPP
