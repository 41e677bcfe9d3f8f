#include "massform/errors.hpp"

namespace massform {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::MissingRamIndex: return "MissingRamIndex";
    case Errc::SpuriousRamIndex: return "SpuriousRamIndex";
    case Errc::SpuriousOmegaIndex: return "SpuriousOmegaIndex";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::MissingOmegaData: return "MissingOmegaData";
    case Errc::UnsupportedPrime: return "UnsupportedPrime";
    case Errc::WrongCharacteristic: return "WrongCharacteristic";
    case Errc::IncoherentFlag: return "IncoherentFlag";
    case Errc::LevelOutOfRange: return "LevelOutOfRange";
    case Errc::MissingTruncation: return "MissingTruncation";
    case Errc::EigenspaceTooLarge: return "EigenspaceTooLarge";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::UnramifiedInput: return "UnramifiedInput";
    case Errc::TruncationTooLarge: return "TruncationTooLarge";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::VerificationFailed: return "VerificationFailed";
  }
  return "UnknownError";
}

DomainError::DomainError(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

void raise(Errc code, const std::string& detail) {
  throw DomainError(code, detail);
}

}  // namespace massform
