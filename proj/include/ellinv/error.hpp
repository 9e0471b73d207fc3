#pragma once

#include <stdexcept>
#include <string>

namespace ellinv {

// Error taxonomy shared by all modules.  Each condition that callers are
// expected to branch on gets its own code; the what() string carries detail.
enum class errc {
    not_prime,
    degree_zero,
    singular_curve,
    point_not_on_curve,
    ambiguous_order,
    torsion_not_rational,
    incompatible_j,
    root_of_unity_missing,
    invalid_input,
    budget_exceeded,
    not_homogeneous,
    length_mismatch,
    not_additive_subgroup,
    pole_at_identity,
    not_sum_zero,
    degenerate_points,
    not_normal,
    no_split_embedding,
    order_divides_l,
    cap_exceeded,
    order_mismatch,
    bad_characteristic,
    enumeration_missing,
    too_many_pole_retries,
    rank_deficient_sampling,
    rank_unstable,
    non_integral_endomorphism,
    non_integral_result,
    missing_orbit_data,
    wrong_model,
    config_error,
    internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace ellinv
