#include "cremona/error.hpp"

namespace cremona {

const char* errc_name(errc c) {
  switch (c) {
    case errc::spec_mismatch: return "SpecMismatch";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::zero_element: return "ZeroElement";
    case errc::unsupported_element: return "UnsupportedElement";
    case errc::unsupported_characteristic: return "UnsupportedCharacteristic";
    case errc::degree_budget_exceeded: return "DegreeBudgetExceeded";
    case errc::non_unit_constant_term: return "NonUnitConstantTerm";
    case errc::not_jonquieres: return "NotJonquieres";
    case errc::not_homogeneous: return "NotHomogeneous";
    case errc::inconsistent_degrees: return "InconsistentDegrees";
    case errc::not_fiberwise: return "NotFiberwise";
    case errc::not_elliptic: return "NotElliptic";
    case errc::char2_nonsplit: return "Char2NonSplit";
    case errc::undecided_square: return "UndecidedSquare";
    case errc::char_p_unsupported: return "CharPUnsupported";
    case errc::root_not_in_field: return "RootNotInField";
    case errc::not_involution_form: return "NotInvolutionForm";
    case errc::not_splittable: return "NotSplittable";
    case errc::not_recognized: return "NotRecognized";
    case errc::chart_mismatch: return "ChartMismatch";
    case errc::not_base_wandering: return "NotBaseWandering";
    case errc::not_commuting: return "NotCommuting";
    case errc::not_free_rank_two: return "NotFreeRankTwo";
    case errc::field_too_small: return "FieldTooSmall";
    case errc::rank_zero_fiber: return "RankZeroFiber";
    case errc::degenerate_step: return "DegenerateStep";
    case errc::unresolved_fixed_points: return "UnresolvedFixedPoints";
    case errc::sequence_too_short: return "SequenceTooShort";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

calc_error::calc_error(errc c, const std::string& msg)
    : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

parse_error::parse_error(std::size_t offset, const std::string& msg)
    : std::runtime_error("syntax error at byte " + std::to_string(offset) + ": " + msg),
      offset_(offset) {}

void fail(errc c, const std::string& msg) { throw calc_error(c, msg); }

} // namespace cremona
