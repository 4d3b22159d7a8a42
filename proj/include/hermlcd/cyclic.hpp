#pragma once

// Cyclic codes over GF(Q): construction from a generator polynomial or a
// defining set, the Hermitian LCD predicate (polynomial and defining-set
// criteria computed independently), Hermitian duals, generator/check
// matrices in polynomial-shift form, the BCH bound, and minimum-distance
// engines (message enumeration, dual enumeration + MacWilliams transform,
// and bounded low-weight search).

#include <cstdint>
#include <optional>
#include <vector>

#include "hermlcd/cosets.hpp"
#include "hermlcd/linalg.hpp"
#include "hermlcd/polyring.hpp"

namespace hermlcd::cyclic {

class Code {
  public:
    Code() = default;  // empty shell; assign from one of the constructors

    static Code from_generator(polyring::ContextPtr ctx, polyring::Poly g);
    static Code from_defining_set(polyring::ContextPtr ctx, cosets::DefiningSet S);

    const polyring::ContextPtr& ctx() const noexcept { return ctx_; }
    const gf::FieldPtr& field() const noexcept { return gen_.field; }
    std::uint64_t n() const noexcept { return n_; }
    std::uint64_t k() const noexcept { return k_; }
    const polyring::Poly& generator() const noexcept { return gen_; }
    const polyring::Poly& check_poly() const noexcept { return check_; }
    const cosets::DefiningSet& defining_set() const noexcept { return set_; }

  private:
    polyring::ContextPtr ctx_;
    polyring::Poly gen_;
    polyring::Poly check_;
    cosets::DefiningSet set_;
    std::uint64_t n_ = 0;
    std::uint64_t k_ = 0;
};

// Both the polynomial criterion g = gbar* and the defining-set criterion
// S = -qS are evaluated; disagreement raises CriterionMismatch.
bool is_hermitian_lcd(const Code& c);

Code hermitian_dual(const Code& c);

// Rows are the cyclic shifts x^i * g(x) (polynomial-shift convention, not
// systematic form). DegenerateCode when the requested matrix would be empty.
linalg::Matrix generator_matrix(const Code& c);
linalg::Matrix check_matrix(const Code& c);

std::vector<linalg::Vec> generator_rows(const Code& c);

// One more than the longest cyclically-consecutive run inside the defining
// set (runs may wrap past n-1 -> 0).
std::uint64_t bch_lower_bound(const Code& c);

bool contains_vector(const Code& c, const linalg::Vec& v);

enum class DistanceMethod { auto_pick, message_enum, low_weight, macwilliams, bound_only };
const char* method_name(DistanceMethod m) noexcept;

struct DistanceReport {
    std::uint64_t lower = 1;  // best proven lower bound (>= BCH bound)
    std::optional<std::uint64_t> exact;
    DistanceMethod method = DistanceMethod::bound_only;
    std::uint64_t work = 0;  // enumeration count performed
    bool budget_exceeded = false;
};

inline constexpr std::uint64_t kAutoEnumThreshold = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;

DistanceReport min_distance(const Code& c,
                            DistanceMethod method = DistanceMethod::auto_pick,
                            std::uint64_t budget = kDefaultBudget);

struct WeightEnumerator {
    std::vector<std::uint64_t> counts;  // A_0 .. A_n
};

// Full weight distribution by message enumeration (Q^k must stay modest).
WeightEnumerator weight_enumerator(const Code& c, std::uint64_t budget = kDefaultBudget);

// W_C from W_{C_dual}: counts of the dual (summing to Q^(n-k)) in, counts of
// the code (summing to Q^k) out. InconsistentEnumerator when the transform
// does not land on non-negative integers.
WeightEnumerator macwilliams_transform(const WeightEnumerator& dual_enum,
                                       std::uint64_t n, std::uint64_t Q,
                                       std::uint64_t k_target);

// Weight histogram of the row space of `rows` (Q^rows.size() combinations,
// zero included). Deterministic work split; BudgetExceeded past `budget`.
std::vector<std::uint64_t> span_weight_histogram(const gf::Field& f,
                                                 const std::vector<linalg::Vec>& rows,
                                                 std::size_t n,
                                                 std::uint64_t budget);

}  // namespace hermlcd::cyclic
