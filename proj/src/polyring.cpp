#include "hermlcd/polyring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace hermlcd::polyring {

namespace {

void normalize(Poly& p) {
    while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
}

void check_same_field(const Poly& a, const Poly& b) {
    require(a.field && b.field && a.field->same_field(*b.field), errc::field_mismatch,
            "polynomials live in different fields");
}

}  // namespace

Poly make_poly(gf::FieldPtr f, std::vector<std::uint64_t> coeffs) {
    Poly p;
    p.field = std::move(f);
    p.c.reserve(coeffs.size());
    for (std::uint64_t v : coeffs) p.c.push_back(p.field->element(v));
    normalize(p);
    return p;
}

Poly zero_poly(gf::FieldPtr f) { return Poly{std::move(f), {}}; }

Poly one_poly(gf::FieldPtr f) { return Poly{std::move(f), {1}}; }

Poly x_power(gf::FieldPtr f, std::size_t e) {
    Poly p{std::move(f), std::vector<gf::elem>(e + 1, 0)};
    p.c[e] = 1;
    return p;
}

Poly x_n_minus_one(gf::FieldPtr f, std::size_t n) {
    Poly p{f, std::vector<gf::elem>(n + 1, 0)};
    p.c[0] = f->neg(1);
    p.c[n] = 1;
    return p;
}

Poly add(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    const gf::Field& f = *a.field;
    Poly out{a.field, std::vector<gf::elem>(std::max(a.c.size(), b.c.size()), 0)};
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = f.add(a.at(i), b.at(i));
    normalize(out);
    return out;
}

Poly sub(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    const gf::Field& f = *a.field;
    Poly out{a.field, std::vector<gf::elem>(std::max(a.c.size(), b.c.size()), 0)};
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = f.sub(a.at(i), b.at(i));
    normalize(out);
    return out;
}

Poly mul(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return zero_poly(a.field);
    const gf::Field& f = *a.field;
    Poly out{a.field, std::vector<gf::elem>(a.c.size() + b.c.size() - 1, 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == 0) continue;
            out.c[i + j] = f.add(out.c[i + j], f.mul(a.c[i], b.c[j]));
        }
    }
    return out;
}

Poly scale(const Poly& a, gf::elem s) {
    const gf::Field& f = *a.field;
    Poly out = a;
    for (auto& coef : out.c) coef = f.mul(coef, s);
    normalize(out);
    return out;
}

DivModResult divmod(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    require(!b.is_zero(), errc::division_by_zero, "polynomial division by zero");
    const gf::Field& f = *a.field;
    if (a.degree() < b.degree()) return {zero_poly(a.field), a};
    Poly rem = a;
    Poly quot{a.field,
              std::vector<gf::elem>(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0)};
    const gf::elem lead_inv = f.inv(b.lc());
    for (int i = a.degree(); i >= b.degree(); --i) {
        gf::elem coef = rem.at(static_cast<std::size_t>(i));
        if (coef == 0) continue;
        gf::elem factor = f.mul(coef, lead_inv);
        std::size_t shift = static_cast<std::size_t>(i - b.degree());
        quot.c[shift] = factor;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            gf::elem& r = rem.c[shift + j];
            r = f.sub(r, f.mul(factor, b.c[j]));
        }
    }
    normalize(rem);
    normalize(quot);
    return {quot, rem};
}

bool divides(const Poly& d, const Poly& a) { return divmod(a, d).rem.is_zero(); }

Poly monic(const Poly& a) {
    if (a.is_zero() || a.lc() == 1) return a;
    return scale(a, a.field->inv(a.lc()));
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).rem;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return zero_poly(a.field);
    Poly g = gcd(a, b);
    return monic(divmod(mul(a, b), g).quot);
}

Poly derivative(const Poly& a) {
    if (a.degree() < 1) return zero_poly(a.field);
    const gf::Field& f = *a.field;
    Poly out{a.field, std::vector<gf::elem>(a.c.size() - 1, 0)};
    for (std::size_t i = 1; i < a.c.size(); ++i) {
        // i mod p copies of the coefficient
        gf::elem acc = 0;
        for (std::size_t t = 0; t < i % f.p(); ++t) acc = f.add(acc, a.c[i]);
        out.c[i - 1] = acc;
    }
    normalize(out);
    return out;
}

gf::elem eval(const Poly& a, gf::elem x) {
    const gf::Field& f = *a.field;
    gf::elem acc = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.c[i]);
    return acc;
}

Poly reciprocal(const Poly& f) {
    require(!f.is_zero() && f.c[0] != 0, errc::zero_constant_term,
            "reciprocal needs a nonzero constant term");
    Poly out = f;
    std::reverse(out.c.begin(), out.c.end());
    return scale(out, f.field->inv(f.c[0]));
}

Poly conjugate_poly(const Poly& f) {
    require(f.field->has_conjugation(), errc::no_conjugation_defined,
            f.field->describe() + " has no conjugation");
    Poly out = f;
    for (auto& coef : out.c) coef = f.field->conj(coef);
    return out;
}

Poly conj_reciprocal(const Poly& f) { return conjugate_poly(reciprocal(f)); }

// ---- big field context ------------------------------------------------

BigFieldContext::BigFieldContext(gf::FieldPtr small, std::uint64_t n)
    : small_(std::move(small)),
      big_([&] {
          require(n >= 1 && n <= (std::uint64_t{1} << 22), errc::out_of_range,
                  "context length out of range");
          unsigned m = cosets::multiplicative_order(small_->size(), n);
          std::uint64_t big_k = std::uint64_t{small_->k()} * m;
          require(big_k <= 64, errc::field_too_large, "extension degree too large");
          if (std::uint64_t size = [&] {
                  std::uint64_t s = 1;
                  for (unsigned i = 0; i < big_k; ++i) {
                      if (s > gf::Field::hard_limit / small_->p()) return gf::Field::hard_limit + 1;
                      s *= small_->p();
                  }
                  return s;
              }();
              size > gf::Field::hard_limit)
              fail(errc::field_too_large, "big-field context exceeds the hard limit");
          return gf::Field::make_unbounded(small_->p(), static_cast<unsigned>(big_k));
      }()),
      n_(n),
      table_(cosets::coset_table(n, small_->size())),
      map_(small_, big_) {
    // beta = alpha^((Q^m - 1)/n) generates the n-th roots of unity.
    const std::uint64_t exponent = (big_->size() - 1) / n;
    gf::elem beta = big_->pow(big_->generator(), exponent);
    beta_pows_.resize(n);
    gf::elem cur = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        beta_pows_[i] = cur;
        cur = big_->mul(cur, beta);
    }
    if (n > 1 && cur != 1)
        throw std::logic_error("beta is not an n-th root of unity");
}

Poly BigFieldContext::minimal_polynomial(std::uint64_t s) const {
    auto members = table_.coset_of(s);
    const gf::Field& F = *big_;
    // Root product over the big field, then project coefficients into GF(Q).
    std::vector<gf::elem> acc{1};
    for (std::uint32_t i : members) {
        gf::elem root = beta_pows_[i];
        std::vector<gf::elem> next(acc.size() + 1, 0);
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] = F.add(next[j + 1], acc[j]);
            next[j] = F.add(next[j], F.mul(acc[j], F.neg(root)));
        }
        acc = std::move(next);
    }
    Poly out{small_, std::vector<gf::elem>(acc.size(), 0)};
    for (std::size_t j = 0; j < acc.size(); ++j) {
        require(map_.in_subfield(acc[j]), errc::projection_failure,
                "minimal polynomial coefficient escaped GF(Q)");
        out.c[j] = map_.project(acc[j]);
    }
    return out;
}

Poly BigFieldContext::generator_from_set(const cosets::DefiningSet& S) const {
    require(S.n == n_, errc::dimension_mismatch, "defining set length mismatch");
    std::vector<std::uint32_t> leads;
    for (std::uint32_t e : S.elems)
        if (table_.leader(e) == e) leads.push_back(e);
    Poly g = one_poly(small_);
    for (std::uint32_t s : leads) g = mul(g, minimal_polynomial(s));
    if (static_cast<std::size_t>(g.degree()) != S.size())
        throw std::logic_error("generator degree disagrees with |S|");
    return g;
}

ContextPtr make_context(gf::FieldPtr small, std::uint64_t n) {
    return std::make_shared<const BigFieldContext>(std::move(small), n);
}

// ---- canonical factorization ----------------------------------------

FactorSplit factor_split(const BigFieldContext& ctx) {
    const auto& table = ctx.table();
    const std::uint64_t n = ctx.n();
    const std::uint64_t q = ctx.small()->conj_q();

    std::map<std::vector<gf::elem>, std::uint32_t> by_coeffs;
    std::vector<Poly> factors(table.leaders.size());
    for (std::size_t i = 0; i < table.leaders.size(); ++i) {
        factors[i] = ctx.minimal_polynomial(table.leaders[i]);
        by_coeffs.emplace(factors[i].c, table.leaders[i]);
    }
    auto index_of = [&](std::uint32_t leader) {
        return static_cast<std::size_t>(
            std::lower_bound(table.leaders.begin(), table.leaders.end(), leader) -
            table.leaders.begin());
    };

    FactorSplit out;
    std::vector<bool> seen(table.leaders.size(), false);
    std::size_t degree_sum = 0;
    for (std::size_t i = 0; i < table.leaders.size(); ++i) {
        if (seen[i]) continue;
        seen[i] = true;
        const std::uint32_t s = table.leaders[i];
        const Poly& f = factors[i];
        Poly partner = conj_reciprocal(f);
        if (partner == f) {
            out.self_leaders.push_back(s);
            out.self_factors.push_back(f);
            degree_sum += static_cast<std::size_t>(f.degree());
            continue;
        }
        auto it = by_coeffs.find(partner.c);
        if (it == by_coeffs.end())
            throw std::logic_error("conjugate-reciprocal of a factor is not a factor");
        const std::uint32_t s2 = it->second;
        // Cross-check against the coset route: the partner of C_s is C_{-qs}.
        std::uint32_t expected = table.leader((n - q % n * (s % n) % n) % n);
        if (s2 != expected)
            throw std::logic_error("factor pairing disagrees with the coset map");
        seen[index_of(s2)] = true;
        out.pair_leaders.emplace_back(s, s2);
        out.pair_factors.emplace_back(f, partner);
        degree_sum += static_cast<std::size_t>(f.degree() + partner.degree());
    }
    if (degree_sum != n)
        throw std::logic_error("factor degrees do not sum to n");
    return out;
}

}  // namespace hermlcd::polyring
