#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace cremona {

// Domain error taxonomy. The CLI maps calc_error to exit code 1 and
// parse_error (plus bad usage) to exit code 2.
enum class errc {
  spec_mismatch,
  division_by_zero,
  zero_element,
  unsupported_element,
  unsupported_characteristic,
  degree_budget_exceeded,
  non_unit_constant_term,
  not_jonquieres,
  not_homogeneous,
  inconsistent_degrees,
  not_fiberwise,
  not_elliptic,
  char2_nonsplit,
  undecided_square,
  char_p_unsupported,
  root_not_in_field,
  not_involution_form,
  not_splittable,
  not_recognized,
  chart_mismatch,
  not_base_wandering,
  not_commuting,
  not_free_rank_two,
  field_too_small,
  rank_zero_fiber,
  degenerate_step,
  unresolved_fixed_points,
  sequence_too_short,
  internal,
};

const char* errc_name(errc c);

class calc_error : public std::runtime_error {
public:
  calc_error(errc c, const std::string& msg);
  errc code() const { return code_; }

private:
  errc code_;
};

class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t offset, const std::string& msg);
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

[[noreturn]] void fail(errc c, const std::string& msg);

} // namespace cremona
