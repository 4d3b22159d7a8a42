#include "hermlcd/cyclic.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <stdexcept>
#include <string>

namespace hermlcd::cyclic {

using polyring::Poly;

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 pow_u128_sat(std::uint64_t base, std::uint64_t e, u128 cap) {
    u128 r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

std::vector<std::vector<i128>> binomial_table(std::size_t n) {
    std::vector<std::vector<i128>> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        c[i].assign(i + 1, 1);
        for (std::size_t j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

i128 binom_at(const std::vector<std::vector<i128>>& c, std::size_t i, std::size_t j) {
    if (j > i) return 0;
    return c[i][j];
}

// Krawtchouk polynomial K_j(w) for alphabet size Q and length n.
i128 krawtchouk(const std::vector<std::vector<i128>>& c, std::uint64_t Q, std::size_t n,
                std::size_t j, std::size_t w) {
    i128 acc = 0;
    for (std::size_t s = 0; s <= std::min(j, w); ++s) {
        i128 term = binom_at(c, w, s) * binom_at(c, n - w, j - s);
        i128 p = 1;
        for (std::size_t t = 0; t < j - s; ++t) p *= static_cast<i128>(Q - 1);
        term *= p;
        acc += (s % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

// ---- construction --------------------------------------------------------

namespace {

// Defining set of <g>: leaders s with g(beta^s) = 0, expanded to full cosets.
cosets::DefiningSet defining_set_of(const polyring::BigFieldContext& ctx, const Poly& g) {
    const gf::Field& big = *ctx.big();
    std::vector<gf::elem> coeffs_big(g.c.size());
    for (std::size_t i = 0; i < g.c.size(); ++i) coeffs_big[i] = ctx.embed(g.c[i]);
    std::vector<std::uint64_t> roots;
    for (std::uint32_t s : ctx.table().leaders) {
        gf::elem x = ctx.beta_pow(s);
        gf::elem acc = 0;
        for (std::size_t i = coeffs_big.size(); i-- > 0;)
            acc = big.add(big.mul(acc, x), coeffs_big[i]);
        if (acc == 0) roots.push_back(s);
    }
    return cosets::DefiningSet::from_cosets(ctx.table(), roots);
}

}  // namespace

Code Code::from_generator(polyring::ContextPtr ctx, Poly g) {
    require(!g.is_zero(), errc::not_a_divisor, "zero polynomial generates no cyclic code");
    g = polyring::monic(g);
    Poly xn1 = polyring::x_n_minus_one(ctx->small(), ctx->n());
    auto dm = polyring::divmod(xn1, g);
    require(dm.rem.is_zero(), errc::not_a_divisor,
            "generator does not divide x^n - 1");
    Code c;
    c.ctx_ = std::move(ctx);
    c.n_ = c.ctx_->n();
    c.k_ = c.n_ - static_cast<std::uint64_t>(g.degree());
    c.check_ = dm.quot;
    c.set_ = defining_set_of(*c.ctx_, g);
    c.gen_ = std::move(g);
    if (c.set_.size() != static_cast<std::size_t>(c.gen_.degree()))
        throw std::logic_error("defining set size disagrees with deg(g)");
    return c;
}

Code Code::from_defining_set(polyring::ContextPtr ctx, cosets::DefiningSet S) {
    require(S.n == ctx->n(), errc::dimension_mismatch, "defining set has wrong length");
    require(S.closed_under(ctx->table()), errc::not_coset_closed,
            "defining set is not a union of Q-cyclotomic cosets");
    Code c;
    c.gen_ = ctx->generator_from_set(S);
    Poly xn1 = polyring::x_n_minus_one(ctx->small(), ctx->n());
    auto dm = polyring::divmod(xn1, c.gen_);
    if (!dm.rem.is_zero())
        throw std::logic_error("coset generator does not divide x^n - 1");
    c.ctx_ = std::move(ctx);
    c.n_ = c.ctx_->n();
    c.k_ = c.n_ - static_cast<std::uint64_t>(c.gen_.degree());
    c.check_ = dm.quot;
    c.set_ = std::move(S);
    return c;
}

// ---- predicates and duals -------------------------------------------------

bool is_hermitian_lcd(const Code& c) {
    bool poly_crit = (polyring::conj_reciprocal(c.generator()) == c.generator());

    const std::uint64_t n = c.n();
    const std::uint64_t q = c.field()->conj_q() % n;
    bool set_crit = true;
    for (std::uint32_t e : c.defining_set().elems) {
        std::uint64_t img = (n - q * e % n) % n;
        if (!c.defining_set().contains(img)) {
            set_crit = false;
            break;
        }
    }
    require(poly_crit == set_crit, errc::criterion_mismatch,
            "polynomial and defining-set Hermitian LCD criteria disagree");
    return poly_crit;
}

Code hermitian_dual(const Code& c) {
    Poly gdual = polyring::monic(polyring::conj_reciprocal(c.check_poly()));
    Code d = Code::from_generator(c.ctx(), gdual);
    if (d.k() != c.n() - c.k())
        throw std::logic_error("Hermitian dual has wrong dimension");
    // Spot-verify Hermitian orthogonality on basis pairs when it is cheap.
    if (c.k() > 0 && d.k() > 0 && c.k() * d.k() * c.n() <= (std::uint64_t{1} << 21)) {
        auto a = generator_rows(c);
        auto b = generator_rows(d);
        for (const auto& u : a)
            for (const auto& v : b)
                if (linalg::hermitian_inner(*c.field(), u, v) != 0)
                    throw std::logic_error("dual basis fails Hermitian orthogonality");
    }
    return d;
}

std::vector<linalg::Vec> generator_rows(const Code& c) {
    const std::size_t deg = static_cast<std::size_t>(c.generator().degree());
    std::vector<linalg::Vec> rows(c.k(), linalg::Vec(c.n(), 0));
    for (std::uint64_t i = 0; i < c.k(); ++i)
        for (std::size_t j = 0; j <= deg; ++j) rows[i][i + j] = c.generator().c[j];
    return rows;
}

linalg::Matrix generator_matrix(const Code& c) {
    require(c.k() > 0, errc::degenerate_code, "zero code has no generator matrix");
    linalg::Matrix G(c.field(), c.k(), c.n());
    auto rows = generator_rows(c);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < c.n(); ++j) G.at(i, j) = rows[i][j];
    return G;
}

linalg::Matrix check_matrix(const Code& c) {
    require(c.k() < c.n(), errc::degenerate_code, "full space has no check matrix");
    return generator_matrix(hermitian_dual(c));
}

std::uint64_t bch_lower_bound(const Code& c) {
    const auto& elems = c.defining_set().elems;
    const std::uint64_t n = c.n();
    if (elems.empty()) return 1;
    if (elems.size() == n) return n + 1;
    std::vector<bool> in(n, false);
    for (std::uint32_t e : elems) in[e] = true;
    std::uint64_t start = 0;
    while (in[start]) ++start;  // exists: the set is proper
    std::uint64_t best = 0, cur = 0;
    for (std::uint64_t off = 1; off <= n; ++off) {
        std::uint64_t i = (start + off) % n;
        if (in[i]) {
            ++cur;
            best = std::max(best, cur);
        } else {
            cur = 0;
        }
    }
    return best + 1;
}

bool contains_vector(const Code& c, const linalg::Vec& v) {
    require(v.size() == c.n(), errc::dimension_mismatch, "vector length != n");
    Poly p{c.field(), v};
    while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
    if (p.is_zero()) return true;
    return polyring::divmod(p, c.generator()).rem.is_zero();
}

// ---- weight enumeration kernel ---------------------------------------------

namespace {

std::vector<std::uint8_t> to_bytes(const linalg::Vec& v) {
    std::vector<std::uint8_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<std::uint8_t>(v[i]);
    return out;
}

// Generic odometer over byte vectors. delta[i][s] is the row-i adjustment
// applied when digit i leaves value s (s = Q-1 is the wrap step).
struct ByteEnum {
    const gf::Field& f;
    std::size_t n;
    std::uint64_t Q;
    bool char2;
    std::vector<std::uint8_t> add_tab;                         // Q*Q when !char2
    std::vector<std::vector<std::vector<std::uint8_t>>> delta;  // [row][s][n]

    ByteEnum(const gf::Field& field, const std::vector<linalg::Vec>& rows, std::size_t len)
        : f(field), n(len), Q(field.size()), char2(field.p() == 2) {
        if (!char2) {
            add_tab.resize(Q * Q);
            for (std::uint64_t a = 0; a < Q; ++a)
                for (std::uint64_t b = 0; b < Q; ++b)
                    add_tab[a * Q + b] = static_cast<std::uint8_t>(f.add(a, b));
        }
        delta.resize(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            delta[i].assign(Q, std::vector<std::uint8_t>(n, 0));
            for (std::uint64_t s = 0; s < Q; ++s) {
                std::uint64_t next = (s + 1 == Q) ? 0 : s + 1;
                gf::elem ds = f.sub(next, s);
                for (std::size_t j = 0; j < n; ++j)
                    delta[i][s][j] = static_cast<std::uint8_t>(f.mul(ds, rows[i][j]));
            }
        }
    }

    void run(std::vector<std::uint8_t> cw, unsigned sweep,
             std::vector<std::uint64_t>& counts) const {
        std::vector<std::uint8_t> digit(std::max(1u, sweep), 0);
        std::uint64_t visits = 1;
        for (unsigned i = 0; i < sweep; ++i) visits *= Q;
        for (std::uint64_t v = 0;;) {
            std::size_t w = 0;
            for (std::uint8_t x : cw) w += (x != 0);
            ++counts[w];
            if (++v == visits) break;
            unsigned i = 0;
            for (;;) {
                const std::uint8_t* d = delta[i][digit[i]].data();
                if (char2) {
                    for (std::size_t j = 0; j < n; ++j) cw[j] ^= d[j];
                } else {
                    for (std::size_t j = 0; j < n; ++j)
                        cw[j] = add_tab[std::uint64_t{cw[j]} * Q + d[j]];
                }
                if (++digit[i] == Q) {
                    digit[i] = 0;
                    ++i;
                } else {
                    break;
                }
            }
        }
    }
};

// GF(4) fast path: two bits per symbol packed into 64-bit words.
struct PackedGF4Enum {
    std::size_t n;
    std::size_t words;
    std::vector<std::vector<std::vector<std::uint64_t>>> delta;  // [row][s][word]

    static std::vector<std::uint64_t> pack(const std::vector<std::uint8_t>& v,
                                           std::size_t words) {
        std::vector<std::uint64_t> out(words, 0);
        for (std::size_t j = 0; j < v.size(); ++j)
            out[j / 32] |= std::uint64_t{v[j] & 3u} << (2 * (j % 32));
        return out;
    }

    PackedGF4Enum(const gf::Field& f, const std::vector<linalg::Vec>& rows, std::size_t len)
        : n(len), words((len + 31) / 32) {
        delta.resize(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            delta[i].resize(4);
            for (std::uint64_t s = 0; s < 4; ++s) {
                std::uint64_t next = (s + 1 == 4) ? 0 : s + 1;
                gf::elem ds = f.sub(next, s);
                std::vector<std::uint8_t> dv(n);
                for (std::size_t j = 0; j < n; ++j)
                    dv[j] = static_cast<std::uint8_t>(f.mul(ds, rows[i][j]));
                delta[i][s] = pack(dv, words);
            }
        }
    }

    static std::size_t weight(const std::vector<std::uint64_t>& cw) {
        std::size_t w = 0;
        for (std::uint64_t x : cw) {
            std::uint64_t m = (x | (x >> 1)) & 0x5555555555555555ull;
            w += static_cast<std::size_t>(std::popcount(m));
        }
        return w;
    }

    void run(std::vector<std::uint64_t> cw, unsigned sweep,
             std::vector<std::uint64_t>& counts) const {
        std::vector<std::uint8_t> digit(std::max(1u, sweep), 0);
        std::uint64_t visits = 1;
        for (unsigned i = 0; i < sweep; ++i) visits *= 4;
        for (std::uint64_t v = 0;;) {
            ++counts[weight(cw)];
            if (++v == visits) break;
            unsigned i = 0;
            for (;;) {
                const std::uint64_t* d = delta[i][digit[i]].data();
                for (std::size_t t = 0; t < words; ++t) cw[t] ^= d[t];
                if (++digit[i] == 4) {
                    digit[i] = 0;
                    ++i;
                } else {
                    break;
                }
            }
        }
    }
};

}  // namespace

std::vector<std::uint64_t> span_weight_histogram(const gf::Field& f,
                                                 const std::vector<linalg::Vec>& rows,
                                                 std::size_t n,
                                                 std::uint64_t budget) {
    const std::uint64_t Q = f.size();
    require(Q <= 256, errc::out_of_range, "enumeration kernel expects Q <= 256");
    const unsigned r = static_cast<unsigned>(rows.size());
    u128 total = pow_u128_sat(Q, r, u128(budget));
    require(total <= budget, errc::budget_exceeded,
            "weight enumeration exceeds the work budget");

    std::vector<std::uint64_t> counts(n + 1, 0);
    const bool parallel = total >= (std::uint64_t{1} << 21) && r >= 2;
    const unsigned sweep = parallel ? r - 1 : r;

    auto run_tasks = [&](auto&& engine, auto&& make_start) {
        if (!parallel) {
            engine.run(make_start(std::uint64_t{0}, false), sweep, counts);
            return;
        }
        std::vector<std::future<std::vector<std::uint64_t>>> futs;
        for (std::uint64_t s = 1; s < Q; ++s) {
            futs.push_back(std::async(std::launch::async, [&, s] {
                std::vector<std::uint64_t> local(n + 1, 0);
                engine.run(make_start(s, true), sweep, local);
                return local;
            }));
        }
        engine.run(make_start(std::uint64_t{0}, true), sweep, counts);
        for (auto& fu : futs) {
            auto local = fu.get();
            for (std::size_t i = 0; i <= n; ++i) counts[i] += local[i];
        }
    };

    if (Q == 4 && f.p() == 2) {
        PackedGF4Enum engine(f, rows, n);
        run_tasks(engine, [&](std::uint64_t s, bool top) {
            std::vector<std::uint8_t> start(n, 0);
            if (top && s != 0)
                for (std::size_t j = 0; j < n; ++j)
                    start[j] = static_cast<std::uint8_t>(f.mul(s, rows[r - 1][j]));
            return PackedGF4Enum::pack(start, (n + 31) / 32);
        });
    } else {
        ByteEnum engine(f, rows, n);
        run_tasks(engine, [&](std::uint64_t s, bool top) {
            std::vector<std::uint8_t> start(n, 0);
            if (top && s != 0)
                for (std::size_t j = 0; j < n; ++j)
                    start[j] = static_cast<std::uint8_t>(f.mul(s, rows[r - 1][j]));
            return start;
        });
    }
    return counts;
}

// ---- distance engines -----------------------------------------------------

const char* method_name(DistanceMethod m) noexcept {
    switch (m) {
        case DistanceMethod::auto_pick: return "auto";
        case DistanceMethod::message_enum: return "message-enum";
        case DistanceMethod::low_weight: return "low-weight";
        case DistanceMethod::macwilliams: return "macwilliams";
        case DistanceMethod::bound_only: return "bound-only";
    }
    return "unknown";
}

namespace {

struct EngineResult {
    std::optional<std::uint64_t> exact;
    std::uint64_t work = 0;
    std::uint64_t proven_lower = 1;  // d >= proven_lower even when exact absent
    bool budget_hit = false;
};

EngineResult run_message_enum(const Code& c, std::uint64_t budget) {
    EngineResult res;
    auto counts = span_weight_histogram(*c.field(), generator_rows(c), c.n(), budget);
    res.work = 1;
    for (std::uint64_t i = 0; i < c.k(); ++i) res.work *= c.field()->size();
    for (std::size_t w = 1; w < counts.size(); ++w)
        if (counts[w] != 0) {
            res.exact = w;
            break;
        }
    if (!res.exact) throw std::logic_error("nonzero code without nonzero codeword");
    return res;
}

EngineResult run_macwilliams(const Code& c, std::uint64_t budget) {
    EngineResult res;
    Code dual = hermitian_dual(c);
    auto counts =
        span_weight_histogram(*c.field(), generator_rows(dual), c.n(), budget);
    res.work = 1;
    for (std::uint64_t i = 0; i < dual.k(); ++i) res.work *= c.field()->size();

    const std::size_t n = c.n();
    const std::uint64_t Q = c.field()->size();
    auto binom = binomial_table(n);
    i128 dual_size = 0;
    for (auto v : counts) dual_size += v;
    for (std::size_t j = 1; j <= n; ++j) {
        i128 acc = 0;
        for (std::size_t w = 0; w <= n; ++w) {
            if (counts[w] == 0) continue;
            acc += static_cast<i128>(counts[w]) * krawtchouk(binom, Q, n, j, w);
        }
        require(acc % dual_size == 0 && acc >= 0, errc::inconsistent_enumerator,
                "MacWilliams transform produced a non-integer count");
        if (acc > 0) {
            res.exact = j;
            return res;
        }
    }
    throw std::logic_error("nonzero code with empty transformed enumerator");
}

// Residues x^i mod g, used to test sparse candidates for membership.
struct ResidueTable {
    std::vector<std::vector<gf::elem>> xmod;
    std::size_t deg;

    ResidueTable(const Code& c) {
        const Poly& g = c.generator();
        const gf::Field& f = *c.field();
        deg = static_cast<std::size_t>(g.degree());
        xmod.assign(c.n(), std::vector<gf::elem>(deg, 0));
        if (deg == 0) return;
        xmod[0][0] = 1;
        for (std::size_t i = 1; i < c.n(); ++i) {
            // multiply previous residue by x, reduce by monic g
            const auto& prev = xmod[i - 1];
            auto& cur = xmod[i];
            gf::elem top = prev[deg - 1];
            for (std::size_t j = deg - 1; j > 0; --j) cur[j] = prev[j - 1];
            cur[0] = 0;
            if (top != 0)
                for (std::size_t j = 0; j < deg; ++j)
                    cur[j] = f.sub(cur[j], f.mul(top, g.c[j]));
        }
    }
};

EngineResult run_low_weight(const Code& c, std::uint64_t budget) {
    EngineResult res;
    const gf::Field& f = *c.field();
    const std::size_t n = c.n();
    const std::uint64_t Q = f.size();
    ResidueTable table(c);
    if (table.deg == 0) {  // full space
        res.exact = 1;
        res.work = 1;
        return res;
    }

    std::vector<gf::elem> nonzero(Q - 1);
    for (std::uint64_t s = 1; s < Q; ++s) nonzero[s - 1] = s;

    for (std::size_t w = 1; w <= n; ++w) {
        res.proven_lower = w;  // weights below w are exhausted
        std::vector<std::size_t> pos(w);
        for (std::size_t i = 0; i < w; ++i) pos[i] = i;
        // prefix[t] = residue of sum_{u<=t} val_u x^{pos_u}; val_0 is pinned
        // to 1 (one representative per scalar orbit).
        std::vector<std::vector<gf::elem>> prefix(w, std::vector<gf::elem>(table.deg));
        std::vector<std::size_t> val_idx(w, 0);

        for (;;) {  // supports in colex order
            // reset values for this support
            std::fill(val_idx.begin(), val_idx.end(), 0);
            auto recompute_from = [&](std::size_t level) {
                for (std::size_t t = level; t < w; ++t) {
                    gf::elem val = (t == 0) ? 1 : nonzero[val_idx[t]];
                    const auto& base = table.xmod[pos[t]];
                    for (std::size_t j = 0; j < table.deg; ++j) {
                        gf::elem term = f.mul(val, base[j]);
                        prefix[t][j] = (t == 0) ? term : f.add(prefix[t - 1][j], term);
                    }
                }
            };
            recompute_from(0);
            for (;;) {  // value odometer, last level fastest
                ++res.work;
                if (res.work > budget) {
                    res.budget_hit = true;
                    return res;
                }
                bool zero = true;
                for (std::size_t j = 0; j < table.deg && zero; ++j)
                    zero = (prefix[w - 1][j] == 0);
                if (zero) {
                    res.exact = w;
                    return res;
                }
                // next value assignment (level 0 is pinned)
                std::size_t lvl = w;
                while (lvl-- > 1) {
                    if (++val_idx[lvl] < Q - 1) {
                        recompute_from(lvl);
                        break;
                    }
                    val_idx[lvl] = 0;
                }
                if (lvl == 0 || w == 1) break;  // all value patterns done
            }
            // next support, colex
            std::size_t i = 0;
            for (;;) {
                std::size_t limit = (i + 1 < w) ? pos[i + 1] : n;
                if (pos[i] + 1 < limit) {
                    ++pos[i];
                    for (std::size_t t = 0; t < i; ++t) pos[t] = t;
                    break;
                }
                ++i;
                if (i == w) break;
            }
            if (i == w) break;  // supports exhausted for this weight
        }
    }
    throw std::logic_error("low-weight search exhausted all weights");
}

}  // namespace

DistanceReport min_distance(const Code& c, DistanceMethod method, std::uint64_t budget) {
    DistanceReport rep;
    rep.lower = bch_lower_bound(c);
    rep.method = DistanceMethod::bound_only;
    if (c.k() == 0) return rep;  // zero code: distance undefined

    const std::uint64_t Q = c.field()->size();
    const u128 msg_total = pow_u128_sat(Q, c.k(), u128(1) << 100);
    const u128 dual_total = pow_u128_sat(Q, c.n() - c.k(), u128(1) << 100);

    DistanceMethod chosen = method;
    if (method == DistanceMethod::auto_pick) {
        if (msg_total <= std::min<u128>(kAutoEnumThreshold, budget))
            chosen = DistanceMethod::message_enum;
        else if (dual_total <= std::min<u128>(kAutoEnumThreshold, budget))
            chosen = DistanceMethod::macwilliams;
        else
            chosen = DistanceMethod::low_weight;
    }

    EngineResult er;
    try {
        switch (chosen) {
            case DistanceMethod::message_enum: er = run_message_enum(c, budget); break;
            case DistanceMethod::macwilliams: er = run_macwilliams(c, budget); break;
            case DistanceMethod::low_weight: er = run_low_weight(c, budget); break;
            case DistanceMethod::bound_only: return rep;
            case DistanceMethod::auto_pick: throw std::logic_error("unresolved method");
        }
    } catch (const error& e) {
        if (e.code() == errc::budget_exceeded) {
            rep.budget_exceeded = true;
            return rep;  // bound-only, never a wrong exact value
        }
        throw;
    }

    rep.method = chosen;
    rep.work = er.work;
    rep.budget_exceeded = er.budget_hit;
    rep.lower = std::max(rep.lower, er.proven_lower);
    if (er.exact) {
        if (*er.exact < rep.lower)
            throw std::logic_error("exact distance fell below the BCH bound");
        rep.exact = er.exact;
        rep.lower = std::max(rep.lower, *er.exact);
    }
    return rep;
}

WeightEnumerator weight_enumerator(const Code& c, std::uint64_t budget) {
    WeightEnumerator w;
    w.counts = span_weight_histogram(*c.field(), generator_rows(c), c.n(), budget);
    return w;
}

WeightEnumerator macwilliams_transform(const WeightEnumerator& dual_enum,
                                       std::uint64_t n, std::uint64_t Q,
                                       std::uint64_t k_target) {
    require(n <= 40, errc::out_of_range,
            "full MacWilliams transform supported for n <= 40");
    require(dual_enum.counts.size() == n + 1, errc::inconsistent_enumerator,
            "enumerator must have n+1 entries");
    require(!dual_enum.counts.empty() && dual_enum.counts[0] == 1,
            errc::inconsistent_enumerator, "enumerator must have A_0 = 1");
    i128 dual_size = 0;
    for (auto v : dual_enum.counts) dual_size += v;
    i128 expected = 1;
    for (std::uint64_t i = 0; i < n - k_target; ++i) expected *= static_cast<i128>(Q);
    require(dual_size == expected, errc::inconsistent_enumerator,
            "enumerator does not sum to Q^(n-k)");
    require(dual_size <= (i128{1} << 32), errc::out_of_range,
            "enumerator too large for the exact transform");

    auto binom = binomial_table(n);
    WeightEnumerator out;
    out.counts.assign(n + 1, 0);
    for (std::size_t j = 0; j <= n; ++j) {
        i128 acc = 0;
        for (std::size_t w = 0; w <= n; ++w) {
            if (dual_enum.counts[w] == 0) continue;
            acc += static_cast<i128>(dual_enum.counts[w]) * krawtchouk(binom, Q, n, j, w);
        }
        require(acc >= 0 && acc % dual_size == 0, errc::inconsistent_enumerator,
                "transform produced a non-integer or negative count");
        i128 val = acc / dual_size;
        require(val <= static_cast<i128>(~std::uint64_t{0}), errc::out_of_range,
                "transformed count overflows");
        out.counts[j] = static_cast<std::uint64_t>(val);
    }
    return out;
}

}  // namespace hermlcd::cyclic
