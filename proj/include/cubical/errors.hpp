#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace cubical {

enum class Errc {
  Disconnected,
  NotMedian,
  MalformedEdge,
  SeparationFailure,
  ChainCountExceeded,
  InconsistentSpec,
  TooManyPairs,
  NotAutomorphism,
  FileNotFound,
  ParseError,
  BadArgument,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotMedian: return "NotMedian";
    case Errc::MalformedEdge: return "MalformedEdge";
    case Errc::SeparationFailure: return "SeparationFailure";
    case Errc::ChainCountExceeded: return "ChainCountExceeded";
    case Errc::InconsistentSpec: return "InconsistentSpec";
    case Errc::TooManyPairs: return "TooManyPairs";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::FileNotFound: return "FileNotFound";
    case Errc::ParseError: return "ParseError";
    case Errc::BadArgument: return "BadArgument";
  }
  return "Unknown";
}

// Domain error. `witness` carries up to three indices whose meaning depends
// on the code (a triple for NotMedian, an edge for NotAutomorphism, ...).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg,
        std::array<int, 3> witness = {-1, -1, -1})
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code),
        witness_(witness) {}

  Errc code() const { return code_; }
  const std::array<int, 3>& witness() const { return witness_; }

 private:
  Errc code_;
  std::array<int, 3> witness_;
};

// Internal consistency failure: a validated invariant did not hold, which
// means a bug rather than bad input.
inline void internal_check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("internal check failed: ") + what);
}

}  // namespace cubical
