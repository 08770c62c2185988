#ifndef SDEPTHKIT_ERROR_HPP
#define SDEPTHKIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdepthkit {

// Every failure raised by the library derives from Error. The C API maps
// each subclass to one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wrong ring, wrong arity, malformed value.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A mathematical precondition (primary, irreducible, non-zero, ...) failed.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// Point cap, option cap or deadline exceeded. Never a silent truncation.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace sdepthkit

#endif  // SDEPTHKIT_ERROR_HPP
