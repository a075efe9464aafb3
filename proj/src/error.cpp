#include "selgame/error.hpp"

namespace selgame {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::TypeMismatch: return "type mismatch";
    case Errc::NotExpressible: return "not expressible";
    case Errc::SelectorFailure: return "selector failure";
    case Errc::ConstraintViolation: return "constraint violation";
    case Errc::MissingWitness: return "missing witness";
    case Errc::IllegalMove: return "illegal move";
    case Errc::ClassMismatch: return "class mismatch";
    case Errc::Config: return "configuration error";
    case Errc::Unsupported: return "unsupported";
  }
  return "error";
}

}  // namespace selgame
