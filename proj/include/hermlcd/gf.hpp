#pragma once

// Finite fields GF(p^k) with a deterministic canonical primitive modulus.
//
// Elements are encoded as integers in [0, p^k): the base-p digits of the
// value are the polynomial-basis coordinates, constant term least
// significant. Fields up to the table threshold carry exp/log tables; larger
// fields (needed as scratch extensions when factoring x^n - 1 for lengths
// whose multiplicative order is big) fall back to polynomial-basis
// arithmetic without tables.

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "hermlcd/error.hpp"

namespace hermlcd::gf {

using elem = std::uint64_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
  public:
    // Limit for the public constructor, per the element-table design budget.
    static constexpr std::uint64_t size_limit = std::uint64_t{1} << 26;
    // Fields up to this size get exp/log tables; beyond it arithmetic runs
    // on the polynomial basis directly.
    static constexpr std::uint64_t table_threshold = std::uint64_t{1} << 22;
    // Absolute cap so that p^k - 1 stays factorable by trial division.
    static constexpr std::uint64_t hard_limit = std::uint64_t{1} << 32;

    // build_field: canonical GF(p^k). Throws NotPrime / FieldTooLarge.
    static FieldPtr make(std::uint64_t p, unsigned k);

    // Same construction without the public size limit (still capped by
    // hard_limit). Used for internal big-field contexts only.
    static FieldPtr make_unbounded(std::uint64_t p, unsigned k);

    std::uint64_t p() const noexcept { return p_; }
    unsigned k() const noexcept { return k_; }
    std::uint64_t size() const noexcept { return size_; }
    bool has_tables() const noexcept { return !exp_.empty(); }

    // Monic modulus as k+1 little-endian digits over GF(p).
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    elem zero() const noexcept { return 0; }
    elem one() const noexcept { return 1; }
    // Residue of the indeterminate; generates the multiplicative group.
    elem generator() const noexcept { return generator_; }

    bool same_field(const Field& other) const noexcept {
        return p_ == other.p_ && k_ == other.k_;
    }

    // Checked conversion from an integer encoding.
    elem element(std::uint64_t v) const;

    elem add(elem a, elem b) const;
    elem sub(elem a, elem b) const;
    elem neg(elem a) const;
    elem mul(elem a, elem b) const;
    elem inv(elem a) const;  // DivisionByZero on 0
    elem div(elem a, elem b) const { return mul(a, inv(b)); }
    elem pow(elem a, std::uint64_t e) const;

    // a^(p^j), 0 <= j < k
    elem frobenius(elem a, unsigned j) const;

    // Conjugation x -> x^q on GF(q^2); defined when k is even.
    bool has_conjugation() const noexcept { return k_ % 2 == 0; }
    std::uint64_t conj_q() const;  // q = p^(k/2); NoConjugationDefined if k odd
    elem conj(elem a) const;

    // exp/log table access (valid when has_tables()).
    const std::vector<std::uint32_t>& exp_table() const noexcept { return exp_; }
    const std::vector<std::uint32_t>& log_table() const noexcept { return log_; }
    std::uint64_t log(elem a) const;  // DivisionByZero on 0; requires tables

    std::string describe() const;  // "GF(p^k)" for messages

  private:
    Field() = default;
    static FieldPtr build(std::uint64_t p, unsigned k, std::uint64_t limit);

    elem mul_raw(elem a, elem b) const;  // table-free product
    elem mul_by_x(elem a) const;         // shift-and-reduce, k >= 2

    std::uint64_t p_ = 0;
    unsigned k_ = 0;
    std::uint64_t size_ = 0;
    std::uint64_t generator_ = 0;
    std::uint64_t mod_mask_ = 0;  // p == 2: modulus as bitmask incl. leading bit
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

// Embedding of GF(Q) into GF(Q^m) (same characteristic, divisible degree).
// The image of the small-field generator is the canonical root of the small
// modulus inside the big field, so the map is a ring homomorphism.
class SubfieldMap {
  public:
    SubfieldMap(FieldPtr sub, FieldPtr big);

    const Field& sub() const noexcept { return *sub_; }
    const Field& big() const noexcept { return *big_; }

    elem embed(elem a) const;
    bool in_subfield(elem big_value) const;
    elem project(elem big_value) const;  // NotInSubfield if not in the image

    // Exponent e with embed(sub generator) = (big gen)^(d*e), d = (P-1)/(Q-1).
    std::uint64_t root_exponent() const noexcept { return root_exponent_; }

  private:
    FieldPtr sub_;
    FieldPtr big_;
    std::uint64_t root_exponent_ = 0;
    std::vector<elem> embed_table_;
    std::unordered_map<elem, elem> project_map_;
};

// Distinct prime factors by trial division (inputs < 2^32 by construction).
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t x);

bool is_prime_u64(std::uint64_t p);

}  // namespace hermlcd::gf
