#include "hermlcd/odsm.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermlcd::odsm {

using linalg::Matrix;
using linalg::Vec;

std::uint64_t SplitMix64::next() {
    state += 0x9E3779B97f4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    // multiply-shift; bias is < 2^-64 per draw and the draw sequence is
    // fully determined by the seed
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
}

Instance Instance::setup(cyclic::Code code) {
    require(cyclic::is_hermitian_lcd(code), errc::not_hermitian_lcd,
            "masking needs a Hermitian LCD code");
    require(code.k() > 0 && code.k() < code.n(), errc::degenerate_code,
            "masking needs 0 < k < n");

    Instance inst;
    inst.G_ = cyclic::generator_matrix(code);
    inst.H_ = cyclic::check_matrix(code);
    Matrix Gd = linalg::conj_transpose(inst.G_);
    Matrix Hd = linalg::conj_transpose(inst.H_);
    inst.invGG_ = linalg::mat_inv(linalg::mat_mul(inst.G_, Gd));
    inst.invHH_ = linalg::mat_inv(linalg::mat_mul(inst.H_, Hd));
    inst.RX_ = linalg::mat_mul(Gd, inst.invGG_);
    inst.RY_ = linalg::mat_mul(Hd, inst.invHH_);

    // G H^dag = 0 and the two row spaces fill the whole space.
    Matrix GHd = linalg::mat_mul(inst.G_, Hd);
    for (gf::elem v : GHd.a)
        if (v != 0) throw std::logic_error("G H^dag is nonzero");
    if (code.n() <= 256) {
        Matrix stacked(code.field(), code.n(), code.n());
        for (std::size_t i = 0; i < inst.G_.rows; ++i)
            for (std::size_t j = 0; j < code.n(); ++j)
                stacked.at(i, j) = inst.G_.at(i, j);
        for (std::size_t i = 0; i < inst.H_.rows; ++i)
            for (std::size_t j = 0; j < code.n(); ++j)
                stacked.at(inst.G_.rows + i, j) = inst.H_.at(i, j);
        if (linalg::rank(stacked) != code.n())
            throw std::logic_error("C and its Hermitian dual do not span the space");
    }
    inst.code_ = std::move(code);
    return inst;
}

Vec Instance::mask(const Vec& x, const Vec& y) const {
    require(x.size() == k() && y.size() == n() - k(), errc::dimension_mismatch,
            "mask needs |x| = k and |y| = n-k");
    Vec c = linalg::row_vec_mul(x, G_);
    Vec d = linalg::row_vec_mul(y, H_);
    return linalg::vec_add(field(), c, d);
}

Vec Instance::recover_x(const Vec& z) const {
    require(z.size() == n(), errc::dimension_mismatch, "state must have length n");
    return linalg::row_vec_mul(z, RX_);
}

Vec Instance::recover_y(const Vec& z) const {
    require(z.size() == n(), errc::dimension_mismatch, "state must have length n");
    return linalg::row_vec_mul(z, RY_);
}

Instance::CheckResult Instance::inject_and_check(const Vec& z, const Vec& epsilon,
                                                 const Vec& y_expected) const {
    require(z.size() == n() && epsilon.size() == n(), errc::dimension_mismatch,
            "state and fault must have length n");
    require(y_expected.size() == n() - k(), errc::dimension_mismatch,
            "expected mask must have length n-k");
    Vec faulty = linalg::vec_add(field(), z, epsilon);
    CheckResult res;
    res.recovered_y = recover_y(faulty);
    res.detected = (res.recovered_y != y_expected);

    // Independent route: strip the expected mask and test membership in C by
    // polynomial division. Equality of the two answers is the correctness
    // claim of the scheme itself.
    Vec stripped = faulty;
    Vec d = linalg::row_vec_mul(y_expected, H_);
    for (std::size_t i = 0; i < stripped.size(); ++i)
        stripped[i] = field().sub(stripped[i], d[i]);
    bool in_code = cyclic::contains_vector(code_, stripped);
    if (in_code == res.detected)
        throw std::logic_error("mask-recovery and membership checks disagree");
    return res;
}

bool Instance::detects_sparse(const std::vector<std::uint32_t>& positions,
                              const std::vector<gf::elem>& values) const {
    const gf::Field& f = field();
    const std::size_t cols = RY_.cols;
    Vec acc(cols, 0);
    for (std::size_t t = 0; t < positions.size(); ++t) {
        const gf::elem v = values[t];
        if (v == 0) continue;
        for (std::size_t j = 0; j < cols; ++j) {
            acc[j] = f.add(acc[j], f.mul(v, RY_.at(positions[t], j)));
        }
    }
    for (gf::elem v : acc)
        if (v != 0) return true;
    return false;
}

std::vector<SweepRow> detection_sweep(const Instance& inst, unsigned max_weight,
                                      const SweepOptions& opt) {
    const std::uint64_t n = inst.n();
    const std::uint64_t Q = inst.field().size();
    require(max_weight <= n, errc::out_of_range, "max weight exceeds n");

    std::vector<SweepRow> rows;
    SplitMix64 rng(opt.seed);
    for (unsigned w = 1; w <= max_weight; ++w) {
        // class size C(n,w) (Q-1)^w, saturated far above any usable budget
        constexpr unsigned __int128 cap = static_cast<unsigned __int128>(1) << 100;
        unsigned __int128 count = 1;
        for (unsigned i = 0; i < w; ++i) count = count * (n - i) / (i + 1);
        for (unsigned i = 0; i < w && count < cap; ++i) count *= (Q - 1);
        SweepRow row;
        row.weight = w;
        if (count <= opt.budget) {
            row.exhaustive = true;
            row.total = static_cast<std::uint64_t>(count);
            std::vector<std::uint32_t> pos(w);
            for (unsigned i = 0; i < w; ++i) pos[i] = i;
            std::vector<gf::elem> vals(w, 1);
            for (;;) {
                // all value patterns for this support
                for (;;) {
                    if (inst.detects_sparse(pos, vals)) ++row.detected;
                    std::size_t lvl = w;
                    while (lvl-- > 0) {
                        if (++vals[lvl] < Q) break;
                        vals[lvl] = 1;
                    }
                    if (lvl == static_cast<std::size_t>(-1)) break;
                }
                std::fill(vals.begin(), vals.end(), 1);
                // next support (colex)
                std::size_t i = 0;
                for (;;) {
                    std::uint64_t limit = (i + 1 < w) ? pos[i + 1] : n;
                    if (pos[i] + 1 < limit) {
                        ++pos[i];
                        for (std::size_t t = 0; t < i; ++t) pos[t] = static_cast<std::uint32_t>(t);
                        break;
                    }
                    ++i;
                    if (i == w) break;
                }
                if (i == w) break;
            }
        } else {
            row.exhaustive = false;
            row.total = opt.samples;
            std::vector<std::uint32_t> pos;
            std::vector<gf::elem> vals(w);
            for (std::uint64_t s = 0; s < opt.samples; ++s) {
                // Floyd's uniform w-subset of {0..n-1}
                pos.clear();
                for (std::uint64_t j = n - w; j < n; ++j) {
                    std::uint64_t t = rng.below(j + 1);
                    bool dup = std::find(pos.begin(), pos.end(),
                                         static_cast<std::uint32_t>(t)) != pos.end();
                    pos.push_back(static_cast<std::uint32_t>(dup ? j : t));
                }
                for (unsigned i = 0; i < w; ++i)
                    vals[i] = 1 + rng.below(Q - 1);
                if (inst.detects_sparse(pos, vals)) ++row.detected;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace hermlcd::odsm
