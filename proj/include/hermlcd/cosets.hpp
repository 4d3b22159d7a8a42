#pragma once

// Q-cyclotomic cosets modulo n: the partition of Z_n, coset leaders, the
// leader-window and exceptional-leader results used by the dimension
// formulas, and the J+/J- defining-set unions with their closed-form
// intersection sizes. The closed forms and the explicit set computations are
// deliberately independent code paths so each can serve as the other's
// oracle.

#include <cstdint>
#include <optional>
#include <vector>

#include "hermlcd/error.hpp"

namespace hermlcd::cosets {

struct CosetTable {
    std::uint64_t n = 0;
    std::uint64_t Q = 0;
    unsigned m = 0;  // ord_n(Q)
    std::vector<std::uint32_t> leader_of;  // size n
    std::vector<std::uint32_t> leaders;    // sorted

    std::uint32_t leader(std::uint64_t s) const { return leader_of[s % n]; }
    std::vector<std::uint32_t> coset_of(std::uint64_t s) const;  // sorted members
    std::size_t coset_size(std::uint64_t s) const;
};

CosetTable coset_table(std::uint64_t n, std::uint64_t Q);  // NotCoprime

// Orbit helpers that need no table (used for large-n leader scans).
bool is_coset_leader(std::uint64_t n, std::uint64_t Q, std::uint64_t s);
std::size_t orbit_size(std::uint64_t n, std::uint64_t Q, std::uint64_t s);

// A union of cosets, kept sorted.
struct DefiningSet {
    std::uint64_t n = 0;
    std::vector<std::uint32_t> elems;

    bool contains(std::uint64_t v) const;
    std::size_t size() const { return elems.size(); }
    bool closed_under(const CosetTable& t) const;

    static DefiningSet from_cosets(const CosetTable& t,
                                   const std::vector<std::uint64_t>& reps);
};

DefiningSet set_union(const DefiningSet& a, const DefiningSet& b);
DefiningSet set_intersection(const DefiningSet& a, const DefiningSet& b);

// J+(delta) = union of C_{base+i}, J-(delta) = union of C_{base-q*i},
// i = 1..delta-1 (indices mod n).
std::pair<DefiningSet, DefiningSet> j_sets(const CosetTable& t, std::uint64_t base,
                                           std::uint64_t q, std::uint64_t delta);

// Leader query with the coset-size/leader window prediction attached when s
// falls inside the window (Q^floor(m/2) < n <= Q^m - 1 and
// s*(Q^m - 1) <= n*Q^ceil(m/2)); outside it only the table answer is given.
struct LeaderQuery {
    bool is_leader = false;
    std::size_t coset_size = 0;
    bool in_window = false;
    // Set only when in_window: predicted leader status (true unless Q | s),
    // and the window also predicts coset_size == m.
    std::optional<bool> predicted_leader;
};

LeaderQuery is_leader_in_range(const CosetTable& t, std::uint64_t s);

// Non-leaders among 1 <= i <= 2^m with 4-free i, for n = (4^m - 1)/3.
// Brute-force orbit scan; UnsupportedM for odd m < 5 or m < 2.
std::vector<std::uint32_t> leader_exceptions_third(unsigned m);
// The closed-form exception set the scan is tested against.
std::vector<std::uint32_t> leader_exception_formula_third(unsigned m);

enum class JKind { primitive, third_even, third_odd };

// Closed-form |J+ ∩ J-|. Throws OutOfRange outside the validated windows:
//   primitive:  m >= 2, 2 <= delta <= Q^ceil(m/2) + 1   (Q = q^2)
//   third_even: q = 2, m >= 2 even, 2 <= delta <= 2^m, except the top band
//               at m = 2 where the formula provably overshoots n
//   third_odd:  q = 2, m >= 5 odd, 2 <= delta <= 2^m
std::uint64_t j_intersection_size_formula(JKind kind, std::uint64_t q, unsigned m,
                                          std::uint64_t delta);

std::uint64_t pow_u64(std::uint64_t base, unsigned e);
unsigned multiplicative_order(std::uint64_t base, std::uint64_t n);  // NotCoprime

}  // namespace hermlcd::cosets
