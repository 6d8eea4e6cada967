#include "cubicbasis/errors.hpp"

namespace cubic {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::non_prime_p: return "NonPrimeP";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::unsupported: return "Unsupported";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::mixed_fields: return "MixedFields";
    case errc::both_zero: return "BothZero";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::non_coprime_moduli: return "NonCoprimeModuli";
    case errc::not_invertible: return "NotInvertible";
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::zero_input: return "ZeroInput";
    case errc::not_standard_form: return "NotStandardForm";
    case errc::conflicting_targets: return "ConflictingTargets";
    case errc::wrong_characteristic: return "WrongCharacteristic";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::postcondition_failed: return "PostconditionFailed";
    case errc::iteration_cap: return "IterationCap";
    case errc::degenerate_input: return "DegenerateInput";
    case errc::internal_inconsistency: return "InternalInconsistency";
    case errc::verify_failed: return "VerifyFailed";
    case errc::no_solution: return "NoSolution";
    case errc::inseparable_model: return "InseparableModel";
    case errc::singular_basis_matrix: return "SingularBasisMatrix";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::reducible_input: return "ReducibleInput";
    case errc::pure_cubic: return "PureCubic";
    case errc::not_reducible_here: return "NotReducibleHere";
    case errc::reducible_cubic: return "ReducibleCubic";
    case errc::inseparable: return "Inseparable";
    case errc::usage_error: return "UsageError";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

Error::Error(errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace cubic
