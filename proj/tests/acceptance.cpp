// Acceptance suite: reproduces the headline results end to end and prints
// one verdict line per criterion. Exit status is the number of failures.
//
// Set HERMLCD_LONG=1 to also run the 4^15 dual enumeration that pins the
// exact distance of the [129,114] member (minutes instead of the default
// sub-second check).

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "hermlcd/constructions.hpp"
#include "hermlcd/odsm.hpp"

using namespace hermlcd;
using cosets::pow_u64;
using polyring::Poly;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void check(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            notes.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

int g_failures = 0;

void run_criterion(int id, const std::string& title,
                   const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    if (!out.pass) ++g_failures;
    std::ostringstream line;
    line << "criterion " << id << " [" << (out.pass ? "PASS" : "FAIL") << "] " << title
         << " (" << std::fixed;
    line.precision(2);
    line << secs << "s)";
    std::cout << line.str() << "\n";
    for (const auto& n : out.notes) std::cout << "    - " << n << "\n";
    std::cout.flush();
}

polyring::ContextPtr ctx_for(std::uint64_t q_small, std::uint64_t n) {
    std::uint64_t p = q_small;
    for (std::uint64_t d = 2; d * d <= q_small; ++d)
        if (q_small % d == 0) {
            p = d;
            break;
        }
    unsigned a = 0;
    for (std::uint64_t t = q_small; t > 1; t /= p) ++a;
    return polyring::make_context(gf::Field::make(p, 2 * a), n);
}

// all coset-closed divisors of x^n - 1 over GF(q^2)
template <typename Fn>
void for_each_divisor(const polyring::ContextPtr& ctx, Fn&& fn) {
    const auto& leaders = ctx->table().leaders;
    std::vector<Poly> mins;
    mins.reserve(leaders.size());
    for (auto s : leaders) mins.push_back(ctx->minimal_polynomial(s));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << leaders.size()); ++mask) {
        Poly g = polyring::one_poly(ctx->small());
        for (std::size_t i = 0; i < leaders.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) g = polyring::mul(g, mins[i]);
        fn(g);
    }
}

void criterion1(Outcome& out) {
    auto r1 = constructions::construct_hop(1);
    auto d1 = cyclic::min_distance(r1.code, cyclic::DistanceMethod::message_enum);
    out.check(r1.code.n() == 9 && r1.code.k() == 2, "t=1 parameters are [9,2]");
    out.check(d1.exact && *d1.exact == 6, "t=1 exact distance 6 by enumeration");
    out.check(r1.hlcd && r1.k_match, "t=1 Hermitian LCD with matching dimension");

    auto r2 = constructions::construct_hop(2);
    auto d2 = cyclic::min_distance(r2.code, cyclic::DistanceMethod::macwilliams,
                                   std::uint64_t{1} << 23);
    out.check(r2.code.n() == 33 && r2.code.k() == 22, "t=2 parameters are [33,22]");
    out.check(d2.exact && *d2.exact == 6, "t=2 exact distance 6 via MacWilliams");
    out.check(d2.work == pow_u64(4, 11), "t=2 enumerated the 4^11 dual codewords");
    out.check(r2.hlcd && r2.k_match, "t=2 Hermitian LCD with matching dimension");

    auto r3 = constructions::construct_hop(3);
    out.check(r3.code.n() == 129 && r3.code.k() == 114, "t=3 parameters are [129,114]");
    out.check(r3.bch_bound >= 6, "t=3 BCH bound at least 6");
    out.check(r3.hlcd && r3.k_match, "t=3 Hermitian LCD with matching dimension");
    if (std::getenv("HERMLCD_LONG")) {
        auto d3 = cyclic::min_distance(r3.code, cyclic::DistanceMethod::macwilliams,
                                       std::uint64_t{1} << 31);
        out.check(d3.exact && *d3.exact == 6, "t=3 exact distance 6 via 4^15 dual");
        out.note("long check ran: t=3 exact distance " +
                 std::to_string(d3.exact ? *d3.exact : 0));
    } else {
        out.note("t=3 exact distance check skipped (set HERMLCD_LONG=1 to run it)");
    }
}

void criterion2(Outcome& out) {
    auto run_length = [&](std::uint64_t q_small, std::uint64_t n) {
        auto ctx = ctx_for(q_small, n);
        auto split = polyring::factor_split(*ctx);
        std::uint64_t expected = std::uint64_t{1} << (split.u() + split.v());
        std::uint64_t counted = 0;
        for_each_divisor(ctx, [&](const Poly& g) {
            if (polyring::conj_reciprocal(g) == g) ++counted;
        });
        out.check(counted == expected,
                  "n=" + std::to_string(n) + " q=" + std::to_string(q_small) +
                      ": counted " + std::to_string(counted) + " vs 2^(u+v)=" +
                      std::to_string(expected));
    };
    for (std::uint64_t n = 1; n <= 33; ++n)
        if (n % 2 == 1) run_length(2, n);
    for (std::uint64_t n = 1; n <= 20; ++n)
        if (n % 3 != 0) run_length(3, n);
}

void criterion3(Outcome& out) {
    for (std::uint64_t n : {7ull, 9ull, 15ull, 21ull, 31ull}) {
        auto ctx = ctx_for(2, n);
        const std::uint64_t q = 2;
        std::uint64_t divisors = 0;
        for_each_divisor(ctx, [&](const Poly& g) {
            bool poly_crit = (polyring::conj_reciprocal(g) == g);
            // independent set route
            auto code = cyclic::Code::from_generator(ctx, g);
            const auto& S = code.defining_set();
            bool set_crit = true;
            for (auto e : S.elems)
                if (!S.contains((n - q * e % n) % n)) {
                    set_crit = false;
                    break;
                }
            if (poly_crit != set_crit) {
                out.check(false, "criteria disagree at n=" + std::to_string(n));
                return;
            }
            ++divisors;
        });
        out.check(divisors == (std::uint64_t{1} << ctx->table().leaders.size()),
                  "n=" + std::to_string(n) + ": all divisors visited");
    }
}

void criterion4(Outcome& out) {
    auto exhaustive_all_hlcd = [&](std::uint64_t n, std::uint64_t q, std::uint64_t Q) {
        auto table = cosets::coset_table(n, Q);
        return constructions::count_non_hlcd_divisors(table, q) == 0;
    };
    // true side, q = 2
    for (std::uint64_t n : {3ull, 9ull, 33ull, 129ull}) {
        bool pred = constructions::all_hlcd_length_predicate(n, 2);
        out.check(pred, "predicate true at n=" + std::to_string(n) + ", q=2");
        out.check(exhaustive_all_hlcd(n, 2, 4),
                  "every divisor Hermitian LCD at n=" + std::to_string(n) + " (exhaustive)");
    }
    // polynomial-level exhaustive confirmation where cheap
    for (std::uint64_t n : {3ull, 9ull, 33ull}) {
        auto ctx = ctx_for(2, n);
        bool all = true;
        for_each_divisor(ctx, [&](const Poly& g) {
            all = all && (polyring::conj_reciprocal(g) == g);
        });
        out.check(all, "polynomial route: all divisors pass at n=" + std::to_string(n));
    }
    // false side, q = 2, with exhibited non-LCD codes
    for (std::uint64_t n : {5ull, 17ull}) {
        bool pred = constructions::all_hlcd_length_predicate(n, 2);
        out.check(!pred, "predicate false at n=" + std::to_string(n) + ", q=2");
        auto table = cosets::coset_table(n, 4);
        auto witness = constructions::non_hlcd_witness(table, 2);
        out.check(witness.has_value(), "witness coset exists at n=" + std::to_string(n));
        if (witness) {
            auto ctx = ctx_for(2, n);
            auto code =
                cyclic::Code::from_generator(ctx, ctx->minimal_polynomial(*witness));
            out.check(!cyclic::is_hermitian_lcd(code),
                      "<m_" + std::to_string(*witness) + "> is not Hermitian LCD at n=" +
                          std::to_string(n));
        }
    }
    // n = 65 is a boundary case: -1 is an even power of 2 there (2^6 = 64),
    // so the q=2 predicate is false and a witness exists, while over GF(16)
    // the all-LCD property does hold (4^3 = 64 = -1 mod 65).
    bool p65_q2 = constructions::all_hlcd_length_predicate(65, 2);
    out.check(!p65_q2, "n=65, q=2: predicate computes to false");
    {
        auto table = cosets::coset_table(65, 4);
        auto witness = constructions::non_hlcd_witness(table, 2);
        out.check(witness.has_value(), "n=65, q=2: non-LCD witness exists");
        if (witness) {
            auto ctx = ctx_for(2, 65);
            auto code =
                cyclic::Code::from_generator(ctx, ctx->minimal_polynomial(*witness));
            out.check(!cyclic::is_hermitian_lcd(code),
                      "n=65, q=2: witness code fails the criterion");
        }
    }
    bool p65_q4 = constructions::all_hlcd_length_predicate(65, 4);
    out.check(p65_q4, "n=65, q=4: predicate true");
    out.check(exhaustive_all_hlcd(65, 4, 16),
              "n=65, q=4: every divisor Hermitian LCD over GF(16) (exhaustive 2^25)");
    out.note("n=65: -1 is an even power of 2 mod 65 (2^6), so not every length-65 "
             "code over GF(4) is Hermitian LCD; the all-LCD property holds there "
             "over GF(16) instead (4^3 = -1), and at n=129 for q=2 (2^7 = -1)");
}

void criterion5(Outcome& out) {
    std::uint64_t cases = 0, mismatches = 0;
    auto sweep = [&](std::uint64_t q, unsigned m, std::uint64_t e,
                     const std::vector<std::uint64_t>& deltas) {
        for (std::uint64_t delta : deltas) {
            auto rep = constructions::construct_g1(q, m, delta, e);
            ++cases;
            if (!rep.k_match || !rep.hlcd ||
                rep.bch_bound < *rep.d_bound_formula) {
                ++mismatches;
                out.check(false, "g1 q=" + std::to_string(q) + " m=" + std::to_string(m) +
                                     " e=" + std::to_string(e) +
                                     " delta=" + std::to_string(delta));
            }
        }
    };
    auto all_deltas = [](std::uint64_t hi) {
        std::vector<std::uint64_t> v;
        for (std::uint64_t d = 2; d <= hi; ++d) v.push_back(d);
        return v;
    };
    // q = 2: every admissible delta
    for (unsigned m : {2u, 3u})
        for (std::uint64_t e : {1ull, 3ull})
            sweep(2, m, e, all_deltas(pow_u64(4, (m + 1) / 2) + 1));
    // q = 2, m = 4 (n = 255): sampled
    for (std::uint64_t e : {1ull, 3ull})
        sweep(2, 4, e, {2, 3, 5, 8, 11, 14, 17});
    // q = 3, m = 2 (n = 80): every admissible delta, all divisors of q+1
    for (std::uint64_t e : {1ull, 2ull, 4ull}) sweep(3, 2, e, all_deltas(10));
    // q = 3, m = 3 (n = 728): sampled deltas hitting all four odd-m cases
    for (std::uint64_t e : {1ull, 2ull, 4ull})
        sweep(3, 3, e, {5, 20, 26, 27, 40, 52, 53, 54, 70, 78, 79, 80, 81, 82});
    // q = 3, m = 4 (n = 6560): sampled deltas in the even-m formula
    for (std::uint64_t e : {1ull, 2ull, 4ull}) sweep(3, 4, e, {2, 5, 11, 27, 50, 82});
    out.note(std::to_string(cases) + " parameter sets, " + std::to_string(mismatches) +
             " formula/actual mismatches");
}

void criterion6(Outcome& out) {
    std::vector<std::pair<unsigned, std::uint64_t>> deviations;
    std::uint64_t cases = 0;
    for (unsigned m : {2u, 4u, 5u}) {
        for (std::uint64_t delta = 2; delta <= pow_u64(2, m); ++delta) {
            auto rep = constructions::construct_g2(m, delta);
            ++cases;
            out.check(rep.hlcd, "g2 m=" + std::to_string(m) + " delta=" +
                                    std::to_string(delta) + " Hermitian LCD");
            out.check(rep.bch_bound >= *rep.d_bound_formula,
                      "g2 m=" + std::to_string(m) + " delta=" + std::to_string(delta) +
                          " BCH bound");
            if (!rep.k_match) deviations.emplace_back(m, delta);
        }
    }
    // The only tolerated mismatch is the known collapse at m=2, delta=2^m,
    // where the closed form's top band overshoots n = 5.
    bool only_known =
        deviations.size() == 1 && deviations[0] == std::make_pair(2u, std::uint64_t{4});
    out.check(only_known || deviations.empty(),
              "dimension mismatches beyond the known m=2, delta=4 collapse");
    for (auto [m, d] : deviations)
        out.note("known collapse: m=" + std::to_string(m) + ", delta=" +
                 std::to_string(d) + " (the even-m closed form's top band exceeds " +
                 "n = 5 at m = 2; actual k = 0)");
    out.note(std::to_string(cases) + " parameter sets checked");
}

void criterion7(Outcome& out) {
    std::uint64_t checked = 0;
    // primitive: q=2 m in {2,3}; q=3 m=2; across e | q+1
    struct P {
        std::uint64_t q;
        unsigned m;
    };
    for (P pc : {P{2, 2}, P{2, 3}, P{3, 2}}) {
        const std::uint64_t Q = pc.q * pc.q;
        const std::uint64_t n = pow_u64(Q, pc.m) - 1;
        auto table = cosets::coset_table(n, Q);
        for (std::uint64_t e = 1; e <= pc.q + 1; ++e) {
            if ((pc.q + 1) % e != 0) continue;
            for (std::uint64_t delta = 2; delta <= pow_u64(Q, (pc.m + 1) / 2) + 1; ++delta) {
                auto [jp, jm] = cosets::j_sets(table, n / e, pc.q, delta);
                std::uint64_t got = cosets::set_intersection(jp, jm).size();
                std::uint64_t want = cosets::j_intersection_size_formula(
                    cosets::JKind::primitive, pc.q, pc.m, delta);
                if (got != want)
                    out.check(false, "primitive q=" + std::to_string(pc.q) + " m=" +
                                         std::to_string(pc.m) + " delta=" +
                                         std::to_string(delta));
                ++checked;
            }
        }
    }
    // quaternary: m = 4 (even), m = 5 (odd)
    for (unsigned m : {4u, 5u}) {
        const std::uint64_t n = (pow_u64(4, m) - 1) / 3;
        auto table = cosets::coset_table(n, 4);
        auto kind = (m % 2 == 0) ? cosets::JKind::third_even : cosets::JKind::third_odd;
        for (std::uint64_t delta = 2; delta <= pow_u64(2, m); ++delta) {
            auto [jp, jm] = cosets::j_sets(table, 0, 2, delta);
            std::uint64_t got = cosets::set_intersection(jp, jm).size();
            std::uint64_t want = cosets::j_intersection_size_formula(kind, 2, m, delta);
            if (got != want)
                out.check(false, "quaternary m=" + std::to_string(m) + " delta=" +
                                     std::to_string(delta));
            ++checked;
        }
    }
    out.note(std::to_string(checked) + " (kind, parameters, delta) triples compared");
}

void criterion8(Outcome& out) {
    // leader-window scans
    for (std::uint64_t n : {9ull, 33ull, 63ull, 255ull}) {
        auto table = cosets::coset_table(n, 4);
        std::uint64_t in_window = 0;
        for (std::uint64_t s = 1; s < n; ++s) {
            auto q = cosets::is_leader_in_range(table, s);
            if (!q.in_window) continue;
            ++in_window;
            if (q.coset_size != table.m)
                out.check(false, "coset size inside window at n=" + std::to_string(n) +
                                     ", s=" + std::to_string(s));
            if (s % 4 != 0 && !q.is_leader)
                out.check(false, "window leader claim at n=" + std::to_string(n) +
                                     ", s=" + std::to_string(s));
        }
        out.check(in_window > 0, "window nonempty at n=" + std::to_string(n));
    }
    // exceptional non-leaders
    for (unsigned m : {2u, 4u, 6u, 8u}) {
        auto scan = cosets::leader_exceptions_third(m);
        out.check(scan == cosets::leader_exception_formula_third(m),
                  "even m=" + std::to_string(m) + " exception set");
    }
    for (unsigned m : {5u, 7u, 9u}) {
        auto scan = cosets::leader_exceptions_third(m);
        out.check(scan == cosets::leader_exception_formula_third(m),
                  "odd m=" + std::to_string(m) + " exception set");
        if (scan.size() == 2)
            out.note("m=" + std::to_string(m) + ": second exception confirmed as (2^(m+1)+2^(m-1)+1)/3 = " +
                     std::to_string(scan[1]));
    }
}

void criterion9(Outcome& out) {
    auto rep = constructions::construct_hop(1);
    auto inst = odsm::Instance::setup(rep.code);

    const std::vector<gf::elem> G_expected{1, 1, 0, 1, 1, 0, 1, 1, 0,
                                           0, 1, 1, 0, 1, 1, 0, 1, 1};
    out.check(inst.G().a == G_expected, "generator matrix bytes");
    std::vector<gf::elem> H_expected(7 * 9, 0);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 3; ++j) H_expected[i * 9 + i + j] = 1;
    out.check(inst.H().a == H_expected, "mask-basis matrix bytes");

    const linalg::Vec x{1, 2};
    const linalg::Vec y(7, 1);
    auto z = inst.mask(x, y);
    out.check(z == linalg::Vec{0, 3, 3, 0, 2, 3, 0, 3, 3}, "masked state bytes");
    out.check(inst.recover_x(z) == x && inst.recover_y(z) == y, "recovery round trip");

    auto r1 = inst.inject_and_check(z, {2, 0, 2, 2, 0, 2, 2, 0, 2}, y);
    out.check(!r1.detected && r1.recovered_y == linalg::Vec(7, 1),
              "epsilon_1 undetected with intact mask");
    auto r2 = inst.inject_and_check(z, {0, 1, 0, 0, 1, 0, 0, 0, 0}, y);
    out.check(r2.detected && r2.recovered_y == linalg::Vec{1, 0, 0, 1, 1, 1, 1},
              "epsilon_2 detected with recovered mask (1,0,0,1,1,1,1)");
}

void criterion10(Outcome& out) {
    // [9,2,6]: exhaustive weights 1..5 fully detected, weight 6 leaks
    auto inst9 = odsm::Instance::setup(constructions::construct_hop(1).code);
    odsm::SweepOptions opt9;
    opt9.budget = 1u << 20;
    auto rows9 = odsm::detection_sweep(inst9, 6, opt9);
    std::uint64_t total_small = 0;
    for (unsigned w = 1; w <= 5; ++w) {
        const auto& r = rows9[w - 1];
        out.check(r.exhaustive, "[9,2] weight " + std::to_string(w) + " exhaustive");
        out.check(r.detected == r.total,
                  "[9,2] weight " + std::to_string(w) + " fully detected");
        total_small += r.total;
    }
    out.check(total_small == 43443,
              "[9,2] fault count over weights 1..5 is 43443 (sum of C(9,w)3^w)");
    out.note("weights 1..5 hold " + std::to_string(total_small) + " faults in total");
    out.check(rows9[5].detected < rows9[5].total,
              "[9,2] an undetected weight-6 fault exists");
    out.note("[9,2] weight-6 undetected count: " +
             std::to_string(rows9[5].total - rows9[5].detected) +
             " (= number of weight-6 codewords)");

    // [33,22,6]: exhaustive through weight 2, seeded sampling for 3..5
    auto inst33 = odsm::Instance::setup(constructions::construct_hop(2).code);
    odsm::SweepOptions opt33;
    opt33.budget = 5000;  // covers 99 + 4752
    opt33.samples = 334000;
    opt33.seed = 2024;
    auto rows33 = odsm::detection_sweep(inst33, 5, opt33);
    out.check(rows33[0].exhaustive && rows33[0].total == 99, "[33,22] weight 1 exhaustive (99)");
    out.check(rows33[1].exhaustive && rows33[1].total == 4752,
              "[33,22] weight 2 exhaustive (4752)");
    std::uint64_t sampled = 0;
    for (unsigned w = 1; w <= 5; ++w) {
        const auto& r = rows33[w - 1];
        out.check(r.detected == r.total,
                  "[33,22] weight " + std::to_string(w) + " fully detected");
        if (!r.exhaustive) sampled += r.total;
    }
    out.check(sampled >= 1000000, "[33,22] at least 10^6 sampled faults of weights 3..5");
    out.note("[33,22] sampled " + std::to_string(sampled) + " seeded faults");
}

void criterion11(Outcome& out) {
    std::uint64_t codes_checked = 0;
    auto run_family = [&](std::uint64_t q_small, std::uint64_t n_max) {
        const std::uint64_t Q = q_small * q_small;
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            if (n % (Q % 2 == 0 ? 2 : 3) == 0) continue;  // keep gcd(n, Q) = 1
            auto ctx = ctx_for(q_small, n);
            auto en = constructions::enumerate_hlcd(ctx);
            constructions::for_each_hlcd(ctx, en, [&](std::uint64_t, const cyclic::Code& c) {
                if (c.k() == 0) return;
                auto fits = [&](std::uint64_t e) {
                    std::uint64_t v = 1;
                    for (std::uint64_t i = 0; i < e; ++i) {
                        v *= Q;
                        if (v > (1u << 16)) return false;
                    }
                    return v <= (1u << 16);
                };
                if (!fits(c.k()) || !fits(c.n() - c.k())) return;
                auto a = cyclic::min_distance(c, cyclic::DistanceMethod::message_enum);
                auto b = cyclic::min_distance(c, cyclic::DistanceMethod::macwilliams);
                auto lw = cyclic::min_distance(c, cyclic::DistanceMethod::low_weight,
                                               std::uint64_t{1} << 28);
                bool same = a.exact && b.exact && lw.exact && *a.exact == *b.exact &&
                            *a.exact == *lw.exact;
                if (!same)
                    out.check(false, "engines disagree at n=" + std::to_string(n) +
                                         ", k=" + std::to_string(c.k()));
                ++codes_checked;
            });
        }
    };
    run_family(2, 21);
    run_family(3, 10);
    out.check(codes_checked > 0, "at least one code fits both enumeration limits");
    out.note(std::to_string(codes_checked) + " codes compared across all three engines");
}

}  // namespace

int main() {
    std::cout << "acceptance suite: cyclic Hermitian LCD codes + ODSM\n";
    run_criterion(1, "family reproduction: [9,2,6], [33,22,6], [129,114,>=6]", criterion1);
    run_criterion(2, "2^(u+v) counts all Hermitian LCD cyclic codes (Q=4 n<=33, Q=9 n<=20)",
                  criterion2);
    run_criterion(3, "polynomial and defining-set criteria agree on all divisors",
                  criterion3);
    run_criterion(4, "odd-power predicate matches exhaustive all-LCD scans", criterion4);
    run_criterion(5, "primitive-length family dimension formulas", criterion5);
    run_criterion(6, "third-length family dimension formulas", criterion6);
    run_criterion(7, "closed-form J+/J- intersection sizes vs explicit sets", criterion7);
    run_criterion(8, "leader windows and exceptional non-leaders", criterion8);
    run_criterion(9, "masking golden example bytes", criterion9);
    run_criterion(10, "fault detection sweeps", criterion10);
    run_criterion(11, "distance engines agree on every admissible enumerated code",
                  criterion11);
    if (g_failures == 0) {
        std::cout << "all criteria passed\n";
    } else {
        std::cout << g_failures << " criteria FAILED\n";
    }
    return g_failures;
}
