#pragma once

#include <stdexcept>
#include <string>

namespace massform {

// Failure cases surfaced by the library. The CLI maps any of these to
// exit code 3 and prints the case name.
enum class Errc {
  NotPrime,
  MissingRamIndex,
  SpuriousRamIndex,
  SpuriousOmegaIndex,
  IndexOutOfRange,
  MissingOmegaData,
  UnsupportedPrime,
  WrongCharacteristic,
  IncoherentFlag,
  LevelOutOfRange,
  MissingTruncation,
  EigenspaceTooLarge,
  NotADivisor,
  UnramifiedInput,
  TruncationTooLarge,
  UnsupportedField,
  VerificationFailed,
};

const char* errc_name(Errc code);

class DomainError : public std::runtime_error {
 public:
  DomainError(Errc code, const std::string& detail);

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& detail);

}  // namespace massform
