#pragma once

#include <stdexcept>
#include <string>

namespace selgame {

enum class Errc {
  TypeMismatch,
  NotExpressible,
  SelectorFailure,
  ConstraintViolation,
  MissingWitness,
  IllegalMove,
  ClassMismatch,
  Config,
  Unsupported,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace selgame
