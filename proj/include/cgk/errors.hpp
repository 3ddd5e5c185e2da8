#pragma once

#include <stdexcept>
#include <string>

namespace cgk {

enum class Errc {
  NotRational,
  BoundExceeded,
  InternalSplitFailure,
  NotCompatible,
  NotWellDefined,
  ValidationFailed,
  NonIntegralMultiplicity,
  NegativeEntries,
  MissingInput,
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotRational: return "NotRational";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::InternalSplitFailure: return "InternalSplitFailure";
    case Errc::NotCompatible: return "NotCompatible";
    case Errc::NotWellDefined: return "NotWellDefined";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case Errc::NegativeEntries: return "NegativeEntries";
    case Errc::MissingInput: return "MissingInput";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Domain error with a machine-parsable code. what() starts with the code name.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace cgk
