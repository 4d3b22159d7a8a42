#pragma once

// Univariate polynomials over a finite field, the reciprocal and
// coefficient-conjugation operators, and the canonical factorization of
// x^n - 1 through minimal polynomials computed as root products in a big
// extension field.

#include <cstdint>
#include <memory>
#include <vector>

#include "hermlcd/cosets.hpp"
#include "hermlcd/gf.hpp"

namespace hermlcd::polyring {

// Coefficients constant-term first; no trailing zeros; zero polynomial has
// an empty coefficient vector.
struct Poly {
    gf::FieldPtr field;
    std::vector<gf::elem> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    gf::elem lc() const { return c.back(); }
    gf::elem at(std::size_t i) const { return i < c.size() ? c[i] : 0; }

    bool operator==(const Poly& o) const { return c == o.c; }
};

Poly make_poly(gf::FieldPtr f, std::vector<std::uint64_t> coeffs);
Poly zero_poly(gf::FieldPtr f);
Poly one_poly(gf::FieldPtr f);
Poly x_power(gf::FieldPtr f, std::size_t e);
Poly x_n_minus_one(gf::FieldPtr f, std::size_t n);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, gf::elem s);

struct DivModResult {
    Poly quot;
    Poly rem;
};
DivModResult divmod(const Poly& a, const Poly& b);  // DivisionByZero
bool divides(const Poly& d, const Poly& a);

Poly monic(const Poly& a);
Poly gcd(const Poly& a, const Poly& b);  // monic result
Poly lcm(const Poly& a, const Poly& b);  // monic result
Poly derivative(const Poly& a);
gf::elem eval(const Poly& a, gf::elem x);

// f*(x) = f(0)^-1 x^deg(f) f(1/x); always monic; ZeroConstantTerm if f(0)=0.
Poly reciprocal(const Poly& f);
// Coefficient-wise x -> x^q; NoConjugationDefined unless the field is a
// square extension.
Poly conjugate_poly(const Poly& f);
Poly conj_reciprocal(const Poly& f);

// GF(Q) together with GF(Q^m), m = ord_n(Q), the primitive n-th root of
// unity beta, and the coset table for n. Everything downstream (minimal
// polynomials, cyclic codes) hangs off one of these.
class BigFieldContext {
  public:
    BigFieldContext(gf::FieldPtr small, std::uint64_t n);

    const gf::FieldPtr& small() const noexcept { return small_; }
    const gf::FieldPtr& big() const noexcept { return big_; }
    const cosets::CosetTable& table() const noexcept { return table_; }
    std::uint64_t n() const noexcept { return n_; }
    unsigned m() const noexcept { return table_.m; }

    gf::elem beta() const noexcept { return beta_pows_[1 % n_]; }
    gf::elem beta_pow(std::uint64_t i) const { return beta_pows_[i % n_]; }

    gf::elem embed(gf::elem a) const { return map_.embed(a); }
    gf::elem project(gf::elem a) const { return map_.project(a); }

    // m_s(x) = prod over C_s of (x - beta^i), projected into GF(Q).
    Poly minimal_polynomial(std::uint64_t s) const;

    // Generator polynomial of the cyclic code with defining set S:
    // the product of m_s over the coset leaders inside S.
    Poly generator_from_set(const cosets::DefiningSet& S) const;

  private:
    gf::FieldPtr small_;
    gf::FieldPtr big_;
    std::uint64_t n_;
    cosets::CosetTable table_;
    gf::SubfieldMap map_;
    std::vector<gf::elem> beta_pows_;
};

using ContextPtr = std::shared_ptr<const BigFieldContext>;
ContextPtr make_context(gf::FieldPtr small, std::uint64_t n);

// x^n - 1 = e_1 ... e_u * f_1 fbar*_1 ... f_v fbar*_v with e_i = ebar*_i and
// the pairs oriented so the smaller coset leader comes first.
struct FactorSplit {
    std::vector<std::uint32_t> self_leaders;
    std::vector<Poly> self_factors;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pair_leaders;
    std::vector<std::pair<Poly, Poly>> pair_factors;

    std::size_t u() const { return self_factors.size(); }
    std::size_t v() const { return pair_factors.size(); }
};

FactorSplit factor_split(const BigFieldContext& ctx);

}  // namespace hermlcd::polyring
