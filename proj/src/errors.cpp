#include "gk/errors.hpp"

namespace gk {

void rethrow_with_context(const Error& e, const std::string& context) {
  const std::string what = context + ": " + e.what();
  switch (e.kind()) {
    case ErrorKind::Parameter: throw ParameterError(what);
    case ErrorKind::Contract: throw ContractError(what);
    case ErrorKind::Load: throw LoadError(what);
    case ErrorKind::Format: throw FormatError(what);
    case ErrorKind::Resource: throw ResourceError(what);
    case ErrorKind::Overflow: throw OverflowError(what);
    case ErrorKind::InvalidKernel: throw InvalidKernelError(what);
  }
  throw Error(e.kind(), what);
}

}  // namespace gk
