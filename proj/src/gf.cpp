#include "hermlcd/gf.hpp"

#include <algorithm>
#include <string>

namespace hermlcd::gf {

namespace {

// ---- digit-vector polynomial helpers over GF(p), little-endian ----------

using Digits = std::vector<std::uint32_t>;

void value_to_digits(std::uint64_t v, std::uint64_t p, unsigned count, Digits& out) {
    out.assign(count, 0);
    for (unsigned i = 0; i < count; ++i) {
        out[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
    }
}

std::uint64_t digits_to_value(const Digits& d, std::uint64_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

int poly_deg(const Digits& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return static_cast<int>(i);
    return -1;
}

// r = r mod f, f monic of degree k given as k+1 digits.
void poly_reduce(Digits& r, const Digits& f, std::uint64_t p) {
    const int k = static_cast<int>(f.size()) - 1;
    for (int i = poly_deg(r); i >= k; --i) {
        std::uint64_t c = r[i];
        if (c == 0) continue;
        std::uint64_t neg = p - c;
        for (int j = 0; j <= k; ++j) {
            r[i - k + j] = static_cast<std::uint32_t>((r[i - k + j] + neg * f[j]) % p);
        }
    }
    r.resize(f.size() - 1);
}

Digits poly_mulmod(const Digits& a, const Digits& b, const Digits& f, std::uint64_t p) {
    Digits r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + ai * b[j]) % p);
        }
    }
    poly_reduce(r, f, p);
    return r;
}

Digits poly_powmod(Digits base, std::uint64_t e, const Digits& f, std::uint64_t p) {
    Digits r(f.size() - 1, 0);
    r[0] = 1;
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

bool poly_is_one(const Digits& a) { return poly_deg(a) == 0 && a[0] == 1; }

Digits poly_sub(Digits a, const Digits& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = static_cast<std::uint32_t>((a[i] + p - b[i]) % p);
    return a;
}

Digits poly_gcd(Digits a, Digits b, std::uint64_t p) {
    auto mod_inv = [p](std::uint64_t x) {
        // Fermat; p prime.
        std::uint64_t r = 1, e = p - 2, base = x % p;
        while (e > 0) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    while (poly_deg(b) >= 0) {
        // a = a mod b
        int db = poly_deg(b);
        std::uint64_t lead_inv = mod_inv(b[db]);
        for (int i = poly_deg(a); i >= db; --i) {
            std::uint64_t c = a[i];
            if (c == 0) continue;
            std::uint64_t q = c * lead_inv % p;
            std::uint64_t negq = p - q;
            for (int j = 0; j <= db; ++j)
                a[i - db + j] =
                    static_cast<std::uint32_t>((a[i - db + j] + negq * b[j]) % p);
        }
        std::swap(a, b);
    }
    return a;
}

// Monic f of degree k, irreducibility over GF(p) via x^(p^i) chains.
bool is_irreducible(const Digits& f, std::uint64_t p) {
    const unsigned k = static_cast<unsigned>(f.size()) - 1;
    if (k == 1) return true;
    Digits x(f.size() - 1, 0);
    x[1] = 1;
    std::vector<Digits> frob_chain;  // frob_chain[i] = x^(p^(i+1)) mod f
    Digits t = x;
    for (unsigned i = 1; i <= k; ++i) {
        t = poly_powmod(t, p, f, p);
        frob_chain.push_back(t);
    }
    if (poly_sub(frob_chain[k - 1], x, p) != Digits(f.size() - 1, 0)) return false;
    for (std::uint64_t r : distinct_prime_factors(k)) {
        Digits diff = poly_sub(frob_chain[k / r - 1], x, p);
        Digits g = poly_gcd(f, diff, p);
        if (poly_deg(g) != 0) return false;
    }
    return true;
}

// Is the residue of x primitive mod f (monic irreducible of degree k)?
bool residue_x_is_primitive(const Digits& f, std::uint64_t p, std::uint64_t order) {
    if (f[0] == 0) return false;  // x divides f
    Digits x(f.size() - 1, 0);
    if (f.size() - 1 == 1) {
        // Degree one: residue of x is -f[0] in GF(p).
        std::uint64_t a = (p - f[0]) % p;
        if (a == 0) return false;
        for (std::uint64_t r : distinct_prime_factors(order)) {
            std::uint64_t t = 1, e = order / r, base = a;
            while (e > 0) {
                if (e & 1) t = t * base % p;
                base = base * base % p;
                e >>= 1;
            }
            if (t == 1) return false;
        }
        return true;
    }
    x[1] = 1;
    for (std::uint64_t r : distinct_prime_factors(order)) {
        if (poly_is_one(poly_powmod(x, order / r, f, p))) return false;
    }
    return true;
}

}  // namespace

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= x; d += (d == 2) ? 1 : 2) {
        if (x % d == 0) {
            out.push_back(d);
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) out.push_back(x);
    return out;
}

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

FieldPtr Field::make(std::uint64_t p, unsigned k) { return build(p, k, size_limit); }

FieldPtr Field::make_unbounded(std::uint64_t p, unsigned k) {
    return build(p, k, hard_limit);
}

FieldPtr Field::build(std::uint64_t p, unsigned k, std::uint64_t limit) {
    require(is_prime_u64(p), errc::not_prime,
            "characteristic " + std::to_string(p) + " is not prime");
    require(k >= 1, errc::out_of_range, "extension degree must be >= 1");

    // size = p^k with overflow guard against the limit
    std::uint64_t size = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (size > limit / p)
            fail(errc::field_too_large, "GF(" + std::to_string(p) + "^" +
                                            std::to_string(k) + ") exceeds the size limit");
        size *= p;
    }
    require(size >= 2 && size <= limit, errc::field_too_large, "field size out of range");

    auto field = std::shared_ptr<Field>(new Field());
    field->p_ = p;
    field->k_ = k;
    field->size_ = size;

    // Canonical modulus: lexicographically smallest monic primitive
    // polynomial, coefficients compared high-degree-first; that order equals
    // ascending order of the encoded low-coefficient value.
    const std::uint64_t order = size - 1;
    Digits f;
    bool found = false;
    for (std::uint64_t v = 0; v < size; ++v) {
        value_to_digits(v, p, k + 1, f);
        f[k] = 1;
        if (!is_irreducible(f, p)) continue;
        if (!residue_x_is_primitive(f, p, order)) continue;
        found = true;
        break;
    }
    require(found, errc::no_primitive_polynomial,
            "no primitive polynomial found (unexpected)");
    field->modulus_ = f;

    if (p == 2) {
        std::uint64_t mask = 0;
        for (unsigned i = 0; i <= k; ++i)
            if (f[i]) mask |= std::uint64_t{1} << i;
        field->mod_mask_ = mask;
    }

    field->generator_ = (k == 1) ? (p - f[0]) % p : p;

    if (size <= table_threshold) {
        const std::uint64_t n1 = size - 1;
        field->exp_.assign(n1, 0);
        field->log_.assign(size, 0);
        elem cur = 1;
        for (std::uint64_t i = 0; i < n1; ++i) {
            field->exp_[i] = static_cast<std::uint32_t>(cur);
            field->log_[cur] = static_cast<std::uint32_t>(i);
            cur = (k == 1) ? (cur * field->generator_) % p : field->mul_by_x(cur);
        }
        require(cur == 1, errc::no_primitive_polynomial,
                "generator order check failed (unexpected)");
    }
    return field;
}

elem Field::element(std::uint64_t v) const {
    require(v < size_, errc::out_of_range,
            "value " + std::to_string(v) + " is not an element of " + describe());
    return v;
}

elem Field::add(elem a, elem b) const {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) return (a + b) % p_;
    elem r = 0, mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
        r += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

elem Field::neg(elem a) const {
    if (p_ == 2) return a;
    if (k_ == 1) return (p_ - a) % p_;
    elem r = 0, mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
        r += (p_ - a % p_) % p_ * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

elem Field::sub(elem a, elem b) const { return add(a, neg(b)); }

elem Field::mul_by_x(elem a) const {
    if (p_ == 2) {
        a <<= 1;
        if (a & (std::uint64_t{1} << k_)) a ^= mod_mask_;
        return a;
    }
    // Shift digits up by one, then cancel the overflow digit against the
    // monic modulus.
    Digits d;
    value_to_digits(a, p_, k_, d);
    std::uint32_t top = d[k_ - 1];
    for (unsigned i = k_ - 1; i > 0; --i) d[i] = d[i - 1];
    d[0] = 0;
    if (top != 0) {
        std::uint64_t negtop = p_ - top;
        for (unsigned i = 0; i < k_; ++i)
            d[i] = static_cast<std::uint32_t>((d[i] + negtop * modulus_[i]) % p_);
    }
    return digits_to_value(d, p_);
}

elem Field::mul_raw(elem a, elem b) const {
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) return a * b % p_;
    if (p_ == 2) {
        // carry-less multiply then reduce; k <= 32 keeps the product in u64
        std::uint64_t r = 0;
        std::uint64_t x = a;
        unsigned shift = 0;
        while (x) {
            if (x & 1) r ^= b << shift;
            x >>= 1;
            ++shift;
        }
        for (int i = 2 * static_cast<int>(k_) - 2; i >= static_cast<int>(k_); --i)
            if (r & (std::uint64_t{1} << i)) r ^= mod_mask_ << (i - k_);
        return r;
    }
    Digits da, db;
    value_to_digits(a, p_, k_, da);
    value_to_digits(b, p_, k_, db);
    Digits prod = poly_mulmod(da, db, modulus_, p_);
    return digits_to_value(prod, p_);
}

elem Field::mul(elem a, elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty() && k_ != 1) {
        std::uint64_t n1 = size_ - 1;
        std::uint64_t s = log_[a] + log_[b];
        if (s >= n1) s -= n1;
        return exp_[s];
    }
    return mul_raw(a, b);
}

elem Field::inv(elem a) const {
    require(a != 0, errc::division_by_zero, "inverse of zero in " + describe());
    if (!exp_.empty() && k_ != 1) {
        std::uint64_t n1 = size_ - 1;
        std::uint64_t l = log_[a];
        return exp_[l == 0 ? 0 : n1 - l];
    }
    return pow(a, size_ - 2);
}

elem Field::pow(elem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    const std::uint64_t n1 = size_ - 1;
    e %= n1;
    if (!exp_.empty() && k_ != 1) {
        return exp_[log_[a] * e % n1];
    }
    elem r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

elem Field::frobenius(elem a, unsigned j) const {
    require(j < k_, errc::out_of_range, "frobenius iterate out of range");
    std::uint64_t e = 1;
    for (unsigned i = 0; i < j; ++i) e *= p_;
    return pow(a, e);
}

std::uint64_t Field::conj_q() const {
    require(has_conjugation(), errc::no_conjugation_defined,
            describe() + " is not a square extension");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k_ / 2; ++i) q *= p_;
    return q;
}

elem Field::conj(elem a) const { return pow(a, conj_q()); }

std::uint64_t Field::log(elem a) const {
    require(a != 0, errc::division_by_zero, "log of zero");
    require(has_tables(), errc::out_of_range, "field has no exp/log tables");
    return log_[a];
}

std::string Field::describe() const {
    if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

// ---- subfield embedding ---------------------------------------------------

SubfieldMap::SubfieldMap(FieldPtr sub, FieldPtr big) : sub_(sub), big_(big) {
    require(sub_->p() == big_->p(), errc::field_mismatch,
            "subfield embedding needs equal characteristic");
    require(big_->k() % sub_->k() == 0, errc::field_mismatch,
            sub_->describe() + " is not a subfield of " + big_->describe());
    require(sub_->has_tables(), errc::field_too_large,
            "subfield must be table-backed");

    const std::uint64_t q1 = sub_->size() - 1;
    const std::uint64_t d = (big_->size() - 1) / q1;
    const elem gamma = big_->pow(big_->generator(), d);

    // Pick the smallest exponent e (coprime to Q-1) such that gamma^e is a
    // root of the small modulus; this makes the map additive, not just
    // multiplicative.
    auto gcd_u64 = [](std::uint64_t a, std::uint64_t b) {
        while (b) {
            a %= b;
            std::swap(a, b);
        }
        return a;
    };
    elem root = 0;
    for (std::uint64_t e = 1; e <= q1; ++e) {
        if (gcd_u64(e, q1) != 1) continue;
        elem cand = big_->pow(gamma, e);
        // Evaluate the small modulus at cand; prime-field coefficients embed
        // as themselves (single-digit encodings).
        elem acc = 0;
        const auto& f = sub_->modulus();
        for (std::size_t i = f.size(); i-- > 0;) {
            acc = big_->mul(acc, cand);
            acc = big_->add(acc, f[i]);
        }
        if (acc == 0) {
            root = cand;
            root_exponent_ = e;
            break;
        }
    }
    require(root != 0, errc::projection_failure,
            "no root of the subfield modulus found (unexpected)");

    embed_table_.assign(sub_->size(), 0);
    project_map_.reserve(sub_->size() * 2);
    project_map_.emplace(0, 0);
    elem cur = 1;
    for (std::uint64_t j = 0; j < q1; ++j) {
        elem small = sub_->exp_table()[j];
        embed_table_[small] = cur;
        project_map_.emplace(cur, small);
        cur = big_->mul(cur, root);
    }
    require(cur == 1, errc::projection_failure, "embedding order check failed");

    // The map is additive by construction; verify exhaustively (alphabets
    // are tiny).
    if (sub_->size() <= 512) {
        for (std::uint64_t a = 0; a < sub_->size(); ++a)
            for (std::uint64_t b = 0; b < sub_->size(); ++b) {
                elem lhs = embed_table_[sub_->add(a, b)];
                elem rhs = big_->add(embed_table_[a], embed_table_[b]);
                require(lhs == rhs, errc::projection_failure,
                        "subfield embedding is not additive (unexpected)");
            }
    }
}

elem SubfieldMap::embed(elem a) const {
    require(a < sub_->size(), errc::out_of_range, "element outside subfield");
    return embed_table_[a];
}

bool SubfieldMap::in_subfield(elem big_value) const {
    return project_map_.count(big_value) != 0;
}

elem SubfieldMap::project(elem big_value) const {
    auto it = project_map_.find(big_value);
    require(it != project_map_.end(), errc::not_in_subfield,
            "element is not in the embedded subfield");
    return it->second;
}

}  // namespace hermlcd::gf
