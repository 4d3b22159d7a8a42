#pragma once

// The three cyclic Hermitian LCD families, their closed-form dimension
// formulas (kept on a separate integer-only code path so they can act as
// oracles against the coset computation), the all-lengths-HLCD predicate,
// and the exhaustive enumeration behind the 2^(u+v) count.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "hermlcd/cyclic.hpp"

namespace hermlcd::constructions {

enum class Family { hop, primitive_g1, quaternary_g2 };
const char* family_name(Family f) noexcept;

struct FamilyParams {
    Family family = Family::hop;
    std::uint64_t q = 2;   // small-field size; the alphabet is GF(q^2)
    unsigned t_or_m = 1;   // t for hop, m = ord_n(Q) otherwise
    std::uint64_t delta = 4;
    std::uint64_t e = 1;   // divisor of q+1 (primitive_g1 only)
    std::uint64_t b = 0;   // BCH offset where applicable
};

struct Report {
    FamilyParams params;
    cyclic::Code code;
    std::optional<std::int64_t> k_formula;  // absent when no closed form applies
    std::int64_t k_actual = 0;
    bool k_match = true;  // true when k_formula absent or equal to k_actual
    std::optional<std::uint64_t> d_bound_formula;
    std::uint64_t bch_bound = 0;
    bool hlcd = false;
    bool degenerate = false;  // hop at t = 0 collapses to the zero code
    std::optional<cyclic::DistanceReport> distance;
};

// Quaternary [2^(2t+1)+1, 2^(2t+1)-4t-2, d >= 6] family (defining set
// C_0 u C_1 u C_2).
Report construct_hop(unsigned t);

// Length Q^m - 1 family from the augmented BCH generator with offset
// n-hat = n/e, e | q+1; dimension by the odd/even-m piecewise formulas.
Report construct_g1(std::uint64_t q, unsigned m, std::uint64_t delta, std::uint64_t e);

// Quaternary length (4^m - 1)/3 family; dimensions for even m >= 2 and odd
// m >= 5, code construction for any m.
Report construct_g2(unsigned m, std::uint64_t delta);

// Pure-arithmetic dimension formulas (the oracle side of the pair).
std::optional<std::int64_t> g1_dimension_formula(std::uint64_t q, unsigned m,
                                                 std::uint64_t delta);
std::optional<std::int64_t> g2_dimension_formula(unsigned m, std::uint64_t delta);

// lcm of the delta-1 consecutive minimal polynomials starting at b.
polyring::Poly bch_generator(const polyring::BigFieldContext& ctx, std::uint64_t delta,
                             std::uint64_t b);

// True iff -1 is an odd power of q modulo n; equivalently every cyclic code
// of length n over GF(q^2) is Hermitian LCD.
bool all_hlcd_length_predicate(std::uint64_t n, std::uint64_t q);

// Exhaustive loop over all coset-closed divisors, counting those whose
// defining set fails S = -qS. Zero means every cyclic code is Hermitian LCD.
// Works on leader bitmasks so lengths with ~25 cosets stay fast.
std::uint64_t count_non_hlcd_divisors(const cosets::CosetTable& table, std::uint64_t q);

// A witness coset leader whose coset is not fixed by s -> -qs, if any.
std::optional<std::uint32_t> non_hlcd_witness(const cosets::CosetTable& table,
                                              std::uint64_t q);

struct HlcdEnumeration {
    polyring::FactorSplit split;
    std::uint64_t count = 0;  // 2^(u+v)
};

// Every cyclic Hermitian LCD code of length n arises exactly once.
// Guarded by u+v <= 24.
HlcdEnumeration enumerate_hlcd(const polyring::ContextPtr& ctx);

// Visit each of the 2^(u+v) codes in ascending subset-mask order (bit i
// toggles e_i, bit u+j toggles the pair f_j fbar*_j).
void for_each_hlcd(const polyring::ContextPtr& ctx, const HlcdEnumeration& en,
                   const std::function<void(std::uint64_t mask, const cyclic::Code&)>& fn);

}  // namespace hermlcd::constructions
