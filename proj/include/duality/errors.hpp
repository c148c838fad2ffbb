#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace duality {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(std::size_t pos, const std::string& reason)
      : Error("syntax error at offset " + std::to_string(pos) + ": " + reason), position(pos) {}
};

struct ArityError : Error {
  std::string symbol;
  explicit ArityError(const std::string& sym)
      : Error("arity violation for symbol '" + sym + "'"), symbol(sym) {}
};

struct CaptureError : Error {
  std::string boundVar;
  explicit CaptureError(const std::string& var)
      : Error("substitution would capture variable '" + var + "'"), boundVar(var) {}
};

struct UnknownMacro : Error {
  std::string name;
  explicit UnknownMacro(const std::string& n) : Error("unknown macro '" + n + "'"), name(n) {}
};

struct NotDwf : Error {
  explicit NotDwf(const std::string& reason) : Error("not a dwf formula: " + reason) {}
};

struct UnboundVariable : Error {
  std::string name;
  explicit UnboundVariable(const std::string& n)
      : Error("unbound variable '" + n + "'"), name(n) {}
};

struct GenerationExhausted : Error {
  using Error::Error;
};

struct CorpusParseError : Error {
  using Error::Error;
};

// Raised when a formula asks the finite semantics for something the model
// does not interpret (an uninterpreted constant, a foreign symbol).
struct ModelError : Error {
  using Error::Error;
};

}  // namespace duality
