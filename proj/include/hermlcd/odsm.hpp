#pragma once

// Hermitian orthogonal direct sum masking. A sensitive word x and a random
// mask y are stored as z = xG + yH, where G generates a Hermitian LCD code C
// and H generates its Hermitian dual. Both are recovered by projections
// through precomputed inverses; fault checking only ever recovers y.

#include <cstdint>
#include <optional>
#include <vector>

#include "hermlcd/cyclic.hpp"
#include "hermlcd/linalg.hpp"

namespace hermlcd::odsm {

class Instance {
  public:
    // NotHermitianLcd unless the code passes both criteria; DegenerateCode
    // for k = 0 or k = n.
    static Instance setup(cyclic::Code code);

    const cyclic::Code& code() const noexcept { return code_; }
    const linalg::Matrix& G() const noexcept { return G_; }
    const linalg::Matrix& H() const noexcept { return H_; }
    const linalg::Matrix& inv_GG() const noexcept { return invGG_; }
    const linalg::Matrix& inv_HH() const noexcept { return invHH_; }
    std::uint64_t n() const noexcept { return code_.n(); }
    std::uint64_t k() const noexcept { return code_.k(); }
    const gf::Field& field() const noexcept { return *code_.field(); }

    // z = xG + yH
    linalg::Vec mask(const linalg::Vec& x, const linalg::Vec& y) const;
    // x = z G^dag (G G^dag)^-1
    linalg::Vec recover_x(const linalg::Vec& z) const;
    // y = z H^dag (H H^dag)^-1
    linalg::Vec recover_y(const linalg::Vec& z) const;

    struct CheckResult {
        bool detected = false;
        linalg::Vec recovered_y;
    };

    // Verifies recover_y(z + epsilon) against the caller-held mask; never
    // touches x. Undetected exactly when epsilon lies in C.
    CheckResult inject_and_check(const linalg::Vec& z, const linalg::Vec& epsilon,
                                 const linalg::Vec& y_expected) const;

    // Sparse fault detection used by the sweep: positions/values of the
    // nonzero fault coordinates.
    bool detects_sparse(const std::vector<std::uint32_t>& positions,
                        const std::vector<gf::elem>& values) const;

  private:
    Instance() = default;
    cyclic::Code code_;
    linalg::Matrix G_, H_;
    linalg::Matrix invGG_, invHH_;
    linalg::Matrix RX_;  // G^dag (G G^dag)^-1, n x k
    linalg::Matrix RY_;  // H^dag (H H^dag)^-1, n x (n-k)
};

struct SweepRow {
    unsigned weight = 0;
    std::uint64_t total = 0;
    std::uint64_t detected = 0;
    bool exhaustive = true;
};

struct SweepOptions {
    std::uint64_t budget = std::uint64_t{1} << 22;  // per-weight exhaustive cap
    std::uint64_t samples = 100000;                 // per-weight when sampling
    std::uint64_t seed = 0;
};

// Per-weight detection statistics for weights 1..max_weight. A weight class
// is enumerated exhaustively when C(n,w)(Q-1)^w fits the budget, otherwise
// `samples` seeded faults are drawn.
std::vector<SweepRow> detection_sweep(const Instance& inst, unsigned max_weight,
                                      const SweepOptions& opt = {});

// Deterministic seeded generator for reproducible campaigns.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
};

}  // namespace hermlcd::odsm
