#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vndim {

/// Every domain failure the library can report. The CLI maps all of these to
/// exit code 2; usage problems (bad flags, unparseable input) are `Usage`.
enum class ErrorKind {
  ExponentOverflow,
  IncomparableExponents,
  DivisionByZero,
  NonHyperbolic,
  InvalidSignature,
  OddWeight,
  ParityViolation,
  NonPositiveWeight,
  NoOccurrence,
  ScanCapExceeded,
  UnknownGroup,
  ZeroSize,
  NonPositive,
  NotFiniteIndex,
  EvenResidue,
  NotPrimePower,
  TooLarge,
  NotPrime,
  BadRamification,
  LevelOutOfRange,
  NoSuchLattice,
  OddRamifiedConductor,
  InvalidConductor,
  UnknownTable,
  Usage,
};

inline constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::IncomparableExponents: return "IncomparableExponents";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonHyperbolic: return "NonHyperbolic";
    case ErrorKind::InvalidSignature: return "InvalidSignature";
    case ErrorKind::OddWeight: return "OddWeight";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::NoOccurrence: return "NoOccurrence";
    case ErrorKind::ScanCapExceeded: return "ScanCapExceeded";
    case ErrorKind::UnknownGroup: return "UnknownGroup";
    case ErrorKind::ZeroSize: return "ZeroSize";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::NotFiniteIndex: return "NotFiniteIndex";
    case ErrorKind::EvenResidue: return "EvenResidue";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::BadRamification: return "BadRamification";
    case ErrorKind::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorKind::NoSuchLattice: return "NoSuchLattice";
    case ErrorKind::OddRamifiedConductor: return "OddRamifiedConductor";
    case ErrorKind::InvalidConductor: return "InvalidConductor";
    case ErrorKind::UnknownTable: return "UnknownTable";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a discrete series does not occur in L^2 of the first lattice.
/// Carries the smallest weight parameter that does occur.
class NoOccurrenceError : public Error {
 public:
  NoOccurrenceError(const std::string& what, std::int64_t minimal_weight)
      : Error(ErrorKind::NoOccurrence, what), minimal_weight_(minimal_weight) {}

  std::int64_t minimal_weight() const noexcept { return minimal_weight_; }

 private:
  std::int64_t minimal_weight_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace vndim
