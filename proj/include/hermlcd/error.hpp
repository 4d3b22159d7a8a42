#pragma once

#include <stdexcept>
#include <string>

namespace hermlcd {

// Stable error codes; the CLI maps them 1:1 into machine-readable error JSON.
enum class errc {
    not_prime,
    field_too_large,
    no_primitive_polynomial,
    division_by_zero,
    not_in_subfield,
    dimension_mismatch,
    field_mismatch,
    singular_matrix,
    not_coprime,
    unsupported_m,
    out_of_range,
    zero_constant_term,
    no_conjugation_defined,
    projection_failure,
    not_a_divisor,
    not_coset_closed,
    criterion_mismatch,
    budget_exceeded,
    inconsistent_enumerator,
    not_hermitian_lcd,
    degenerate_code,
    too_many_factors,
    usage_error,
};

const char* errc_name(errc c) noexcept;

class error : public std::runtime_error {
  public:
    error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}

    errc code() const noexcept { return code_; }
    const char* code_name() const noexcept { return errc_name(code_); }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

inline void require(bool cond, errc c, const std::string& what) {
    if (!cond) fail(c, what);
}

}  // namespace hermlcd
