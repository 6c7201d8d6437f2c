#pragma once

#include <stdexcept>
#include <string>

namespace gk {

enum class ErrorKind {
  Parameter,      // invalid argument value
  Contract,       // precondition on the input data violated
  Load,           // missing or unreadable file
  Format,         // malformed file content
  Resource,       // memory/size budget exceeded
  Overflow,       // integer counter overflow
  InvalidKernel,  // supplied function is not a valid (binary) kernel
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define GK_DEFINE_ERROR(Name, Kind)                                      \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
  };

GK_DEFINE_ERROR(ParameterError, Parameter)
GK_DEFINE_ERROR(ContractError, Contract)
GK_DEFINE_ERROR(LoadError, Load)
GK_DEFINE_ERROR(FormatError, Format)
GK_DEFINE_ERROR(ResourceError, Resource)
GK_DEFINE_ERROR(OverflowError, Overflow)
GK_DEFINE_ERROR(InvalidKernelError, InvalidKernel)

#undef GK_DEFINE_ERROR

/// Rethrows `e` as the same error category with `context` prepended.
[[noreturn]] void rethrow_with_context(const Error& e, const std::string& context);

}  // namespace gk
