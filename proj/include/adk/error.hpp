#pragma once

#include <stdexcept>
#include <string>

namespace adk {

enum class Errc {
  ZeroPolynomial,
  UnitElement,
  SyntaxError,
  NonIntegerExponent,
  UnknownVariable,
  NotCoprime,
  ReducibleModulus,
  ExtensionFactorizationUnsupported,
  MismatchedDivisorSets,
  AllGeneratorsZero,
  LevelExceedsBound,
  InvalidArgument,
};

const char* errc_name(Errc c);

// Domain error. `position` is a byte offset into the offending input for
// parse errors, -1 otherwise.
class Error : public std::runtime_error {
public:
  Error(Errc code, std::string msg, long pos = -1)
      : std::runtime_error(std::move(msg)), code_(code), pos_(pos) {}

  Errc code() const { return code_; }
  long position() const { return pos_; }

private:
  Errc code_;
  long pos_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg, long pos = -1) {
  throw Error(code, msg, pos);
}

} // namespace adk
