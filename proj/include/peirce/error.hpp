#pragma once

#include <stdexcept>
#include <string>

namespace peirce {

enum class errc {
  // input / construction
  bad_input,
  field_mismatch,
  division_by_zero,
  algebra_mismatch,
  not_unital,
  not_in_domain,
  // frames
  not_idempotent,
  not_orthogonal,
  not_complete,
  peirce_mismatch,
  not_full,
  grading_failure,
  no_decomposition,
  // verifiers
  not_surjective,
  not_graded,
  not_homomorphism,
  domain_not_bracket_closed,
  // standard-map pipeline
  not_specialization,
  inconsistent_system,
  not_multiplicative,
  annihilator_nonzero,
  not_generated,
  // derivation pipeline
  precondition_failed,
  well_definedness_failure,
  representation_failure,
  // factories
  char_two,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_input: return "BadInput";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::algebra_mismatch: return "AlgebraMismatch";
    case errc::not_unital: return "NotUnital";
    case errc::not_in_domain: return "NotInDomain";
    case errc::not_idempotent: return "NotIdempotent";
    case errc::not_orthogonal: return "NotOrthogonal";
    case errc::not_complete: return "NotComplete";
    case errc::peirce_mismatch: return "PeirceMismatch";
    case errc::not_full: return "NotFull";
    case errc::grading_failure: return "GradingFailure";
    case errc::no_decomposition: return "NoDecomposition";
    case errc::not_surjective: return "NotSurjective";
    case errc::not_graded: return "NotGraded";
    case errc::not_homomorphism: return "NotHomomorphism";
    case errc::domain_not_bracket_closed: return "DomainNotBracketClosed";
    case errc::not_specialization: return "NotSpecialization";
    case errc::inconsistent_system: return "InconsistentSystem";
    case errc::not_multiplicative: return "NotMultiplicative";
    case errc::annihilator_nonzero: return "AnnihilatorNonzero";
    case errc::not_generated: return "NotGenerated";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::well_definedness_failure: return "WellDefinednessFailure";
    case errc::representation_failure: return "RepresentationFailure";
    case errc::char_two: return "CharTwo";
  }
  return "Unknown";
}

/// All library failures are reported through this exception type; `code()`
/// distinguishes input errors from mathematical obstructions.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

  /// Input-shaped errors (malformed documents, invalid frames, mismatched
  /// parents) as opposed to verification outcomes.
  bool is_input_error() const {
    switch (code_) {
      case errc::bad_input:
      case errc::field_mismatch:
      case errc::division_by_zero:
      case errc::algebra_mismatch:
      case errc::not_unital:
      case errc::not_in_domain:
      case errc::not_idempotent:
      case errc::not_orthogonal:
      case errc::not_complete:
      case errc::peirce_mismatch:
      case errc::char_two:
        return true;
      default:
        return false;
    }
  }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace peirce
