#include "hermlcd/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hermlcd::cosets {

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

constexpr std::uint64_t kMaxN = std::uint64_t{1} << 27;

}  // namespace

std::uint64_t pow_u64(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

unsigned multiplicative_order(std::uint64_t base, std::uint64_t n) {
    require(n >= 1, errc::out_of_range, "modulus must be positive");
    if (n == 1) return 1;
    base %= n;
    require(gcd_u64(base, n) == 1, errc::not_coprime,
            "order undefined: base shares a factor with the modulus");
    std::uint64_t t = base;
    unsigned m = 1;
    while (t != 1) {
        t = t * base % n;
        ++m;
    }
    return m;
}

CosetTable coset_table(std::uint64_t n, std::uint64_t Q) {
    require(n >= 1 && n <= kMaxN, errc::out_of_range,
            "coset table length out of range");
    require(gcd_u64(n, Q) == 1, errc::not_coprime,
            "gcd(n, Q) must be 1 for cyclotomic cosets");
    CosetTable t;
    t.n = n;
    t.Q = Q;
    t.m = multiplicative_order(Q, n);
    const std::uint64_t q = Q % n;
    t.leader_of.assign(n, 0xFFFFFFFFu);
    for (std::uint64_t s = 0; s < n; ++s) {
        if (t.leader_of[s] != 0xFFFFFFFFu) continue;
        // s is unvisited, hence the minimum of its orbit.
        t.leaders.push_back(static_cast<std::uint32_t>(s));
        std::uint64_t cur = s;
        do {
            t.leader_of[cur] = static_cast<std::uint32_t>(s);
            cur = cur * q % n;
        } while (cur != s);
    }
    return t;
}

std::vector<std::uint32_t> CosetTable::coset_of(std::uint64_t s) const {
    std::uint64_t lead = leader(s);
    std::vector<std::uint32_t> members;
    std::uint64_t cur = lead;
    const std::uint64_t q = Q % n;
    do {
        members.push_back(static_cast<std::uint32_t>(cur));
        cur = cur * q % n;
    } while (cur != lead);
    std::sort(members.begin(), members.end());
    return members;
}

std::size_t CosetTable::coset_size(std::uint64_t s) const {
    return orbit_size(n, Q, s % n);
}

bool is_coset_leader(std::uint64_t n, std::uint64_t Q, std::uint64_t s) {
    s %= n;
    const std::uint64_t q = Q % n;
    std::uint64_t cur = s * q % n;
    while (cur != s) {
        if (cur < s) return false;
        cur = cur * q % n;
    }
    return true;
}

std::size_t orbit_size(std::uint64_t n, std::uint64_t Q, std::uint64_t s) {
    s %= n;
    const std::uint64_t q = Q % n;
    std::size_t len = 1;
    std::uint64_t cur = s * q % n;
    while (cur != s) {
        ++len;
        cur = cur * q % n;
    }
    return len;
}

bool DefiningSet::contains(std::uint64_t v) const {
    return std::binary_search(elems.begin(), elems.end(),
                              static_cast<std::uint32_t>(v % n));
}

bool DefiningSet::closed_under(const CosetTable& t) const {
    for (std::uint32_t e : elems)
        if (!contains(std::uint64_t{e} * (t.Q % t.n) % t.n)) return false;
    return true;
}

DefiningSet DefiningSet::from_cosets(const CosetTable& t,
                                     const std::vector<std::uint64_t>& reps) {
    DefiningSet s;
    s.n = t.n;
    std::vector<std::uint32_t> leads;
    leads.reserve(reps.size());
    for (std::uint64_t r : reps) leads.push_back(t.leader(r));
    std::sort(leads.begin(), leads.end());
    leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
    for (std::uint32_t l : leads) {
        auto members = t.coset_of(l);
        s.elems.insert(s.elems.end(), members.begin(), members.end());
    }
    std::sort(s.elems.begin(), s.elems.end());
    return s;
}

DefiningSet set_union(const DefiningSet& a, const DefiningSet& b) {
    require(a.n == b.n, errc::dimension_mismatch, "set union across lengths");
    DefiningSet out;
    out.n = a.n;
    std::set_union(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                   std::back_inserter(out.elems));
    return out;
}

DefiningSet set_intersection(const DefiningSet& a, const DefiningSet& b) {
    require(a.n == b.n, errc::dimension_mismatch, "set intersection across lengths");
    DefiningSet out;
    out.n = a.n;
    std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(),
                          b.elems.end(), std::back_inserter(out.elems));
    return out;
}

std::pair<DefiningSet, DefiningSet> j_sets(const CosetTable& t, std::uint64_t base,
                                           std::uint64_t q, std::uint64_t delta) {
    require(delta >= 2 && delta <= t.n, errc::out_of_range,
            "designed distance must satisfy 2 <= delta <= n");
    std::vector<std::uint64_t> plus, minus;
    plus.reserve(delta - 1);
    minus.reserve(delta - 1);
    base %= t.n;
    const std::uint64_t qm = q % t.n;
    for (std::uint64_t i = 1; i <= delta - 1; ++i) {
        plus.push_back((base + i) % t.n);
        std::uint64_t qi = qm * (i % t.n) % t.n;
        minus.push_back((base + t.n - qi) % t.n);
    }
    return {DefiningSet::from_cosets(t, plus), DefiningSet::from_cosets(t, minus)};
}

LeaderQuery is_leader_in_range(const CosetTable& t, std::uint64_t s) {
    s %= t.n;
    LeaderQuery out;
    out.is_leader = (t.leader(s) == s);
    out.coset_size = t.coset_size(s);

    // Window: Q^floor(m/2) < n <= Q^m - 1 and 1 <= s*(Q^m-1) <= n*Q^ceil(m/2).
    // Powers can exceed 64 bits for large orders; saturation keeps the
    // comparisons truthful because n is far below the saturation point.
    constexpr std::uint64_t cap = std::uint64_t{1} << 62;
    auto pow_sat = [](std::uint64_t b, unsigned e) {
        std::uint64_t r = 1;
        for (unsigned i = 0; i < e; ++i) {
            if (r > cap / b) return cap;
            r *= b;
        }
        return r;
    };
    const std::uint64_t q_half_floor = pow_sat(t.Q, t.m / 2);
    const std::uint64_t q_half_ceil = pow_sat(t.Q, (t.m + 1) / 2);
    const std::uint64_t q_m = pow_sat(t.Q, t.m);
    bool window = q_half_floor < t.n && q_m >= t.n + 1 && s >= 1;
    if (window) {
        using u128 = unsigned __int128;
        window = u128(s) * (q_m - 1) <= u128(t.n) * q_half_ceil;
    }
    out.in_window = window;
    if (window && s % t.Q != 0) out.predicted_leader = true;
    return out;
}

std::vector<std::uint32_t> leader_exceptions_third(unsigned m) {
    require(m >= 2 && (m % 2 == 0 || m >= 5), errc::unsupported_m,
            "exception scan needs even m >= 2 or odd m >= 5");
    const std::uint64_t n = (pow_u64(4, m) - 1) / 3;
    const std::uint64_t bound = pow_u64(2, m);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 1; i <= bound; ++i) {
        if (i % 4 == 0) continue;
        if (!is_coset_leader(n, 4, i)) out.push_back(static_cast<std::uint32_t>(i));
    }
    return out;
}

std::vector<std::uint32_t> leader_exception_formula_third(unsigned m) {
    require(m >= 2 && (m % 2 == 0 || m >= 5), errc::unsupported_m,
            "exception formula needs even m >= 2 or odd m >= 5");
    if (m % 2 == 0) {
        return {static_cast<std::uint32_t>((pow_u64(2, m + 1) + 1) / 3)};
    }
    // Odd case: two exceptions; leader_exceptions_third reproduces these
    // closed forms by brute force for every supported m.
    return {static_cast<std::uint32_t>((pow_u64(2, m + 1) + 2) / 3),
            static_cast<std::uint32_t>((pow_u64(2, m + 1) + pow_u64(2, m - 1) + 1) / 3)};
}

std::uint64_t j_intersection_size_formula(JKind kind, std::uint64_t q, unsigned m,
                                          std::uint64_t delta) {
    switch (kind) {
        case JKind::primitive: {
            require(m >= 2, errc::out_of_range, "primitive case needs m >= 2");
            const std::uint64_t Q = q * q;
            const std::uint64_t q_bar = pow_u64(Q, (m + 1) / 2);  // Q^ceil(m/2)
            require(delta >= 2 && delta <= q_bar + 1, errc::out_of_range,
                    "delta outside 2..Q^ceil(m/2)+1");
            if (m % 2 == 0) return 0;
            const std::uint64_t qm = pow_u64(q, m);
            if (delta <= qm - 1) return 0;
            for (std::uint64_t u = 1; u <= q - 1; ++u) {
                if (u * qm <= delta && delta <= (u + 1) * (qm - 1)) return u * u * m;
                std::uint64_t c3_base = (u + 1) * (qm - 1);
                if (delta > c3_base && delta <= c3_base + u) {
                    std::uint64_t v = delta - c3_base - 1;
                    return (u * u + 2 * v + 1) * m;
                }
            }
            if (delta == qm * q || delta == qm * q + 1) return q * q * m;
            fail(errc::out_of_range, "delta fell outside the case split (unexpected)");
        }
        case JKind::third_even: {
            require(q == 2, errc::out_of_range, "quaternary case needs q = 2");
            require(m >= 2 && m % 2 == 0, errc::out_of_range, "needs even m >= 2");
            const std::uint64_t top = pow_u64(2, m);
            require(delta >= 2 && delta <= top, errc::out_of_range,
                    "delta outside 2..2^m");
            const std::uint64_t t1 = (pow_u64(2, m + 1) - 2) / 3;
            const std::uint64_t t2 = (pow_u64(2, m + 1) + pow_u64(2, m - 1) - 1) / 3;
            if (delta <= t1) return 0;
            if (delta <= t2) return 2ull * m;
            // At m = 2 the top band claims 4m = 8 > n = 5; the closed form is
            // only valid from m = 4 there.
            require(m >= 4, errc::out_of_range,
                    "top band of the even-m formula is invalid at m = 2");
            return 4ull * m;
        }
        case JKind::third_odd: {
            require(q == 2, errc::out_of_range, "quaternary case needs q = 2");
            require(m >= 5 && m % 2 == 1, errc::out_of_range, "needs odd m >= 5");
            const std::uint64_t top = pow_u64(2, m);
            require(delta >= 2 && delta <= top, errc::out_of_range,
                    "delta outside 2..2^m");
            const std::uint64_t t1 = (pow_u64(2, m + 1) - 1) / 3;
            if (delta <= t1) return 0;
            if (delta <= top - 1) return 2ull * m;
            return 3ull * m;
        }
    }
    fail(errc::out_of_range, "unknown kind");
}

}  // namespace hermlcd::cosets
