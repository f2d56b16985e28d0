// Copyright 2026 The catlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef CATLAB_CATALYSIS_H
#define CATLAB_CATALYSIS_H

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "entropy.h"
#include "majorization.h"
#include "simplex.h"

namespace catlab {

/// Slack on free-energy differences when deciding the second laws.
constexpr double kSecondLawTolerance = 1e-10;
/// Margins this close to zero are reported as sensitive to the alpha grid resolution.
constexpr double kGridSensitivity = 1e-6;

enum class Arithmetic { floating, exact };

struct SecondLaws {
    bool holds = false;
    /// min over the grid of F_alpha(p) - F_alpha(q).
    double margin = 0;
    double worst_alpha = 0;
    /// Minimum over the grid points strictly between 0 and infinity.
    double interior_margin = 0;
    /// The laws hold on the grid, but with an interior margin small enough that a finer grid
    /// could reveal a violation.
    bool grid_sensitive = false;
};

SecondLaws second_laws(const ProbVec &p, const ProbVec &q, const ThermalContext &ctx, const AlphaGrid &grid);
bool second_laws_holds(const ProbVec &p, const ProbVec &q, const ThermalContext &ctx, const AlphaGrid &grid);

/// Block i (1-based) of a Duan state: q^(k-i) (x) p^(i-1), each with weight 1/k.
struct DuanBlock {
    size_t q_power;
    size_t p_power;
};

/// Symbolic Duan catalyst. Nothing of size k * d^(k-1) is allocated until materialize().
struct DuanSpec {
    size_t k = 0;
    ProbVec p;
    ProbVec q;
    std::vector<DuanBlock> blocks;
    size_t block_dim = 0;
    size_t total_dim = 0;

    ProbVec materialize(size_t cap = kDefaultDimCap) const;
    std::vector<mpq_class> materialize_exact(size_t cap = kDefaultDimCap) const;
    /// Shannon entropy from the block structure: log2 k + (k-1)(H(p) + H(q))/2.
    double entropy() const;
    /// Thermal context of the catalyst register: a degenerate block label times k-1 system copies.
    ThermalContext context(const ThermalContext &system, size_t cap = kDefaultDimCap) const;
};

DuanSpec duan_state(const ProbVec &p, const ProbVec &q, size_t k, size_t cap = kDefaultDimCap);

struct DuanCheck {
    bool kcopy_ok = false;
    bool catalytic_ok = false;
};

/// kcopy_ok: p^k thermo-majorizes q^k. catalytic_ok: p (x) duan thermo-majorizes q (x) duan.
/// kcopy_ok without catalytic_ok is impossible; a floating-point disagreement is re-decided
/// exactly and a confirmed violation throws std::logic_error.
DuanCheck duan_catalysis_check(
    const ProbVec &p,
    const ProbVec &q,
    size_t k,
    const ThermalContext &ctx,
    Arithmetic arithmetic = Arithmetic::floating,
    size_t cap = kDefaultDimCap);

/// k-copy thermo-majorization p^k over q^k.
bool kcopy_transformable(
    const ProbVec &p,
    const ProbVec &q,
    size_t k,
    const ThermalContext &ctx,
    Arithmetic arithmetic = Arithmetic::floating,
    size_t cap = kDefaultDimCap);

/// Smallest k <= k_max with p^k thermo-majorizing q^k. Every k is tested; no monotonicity in k
/// is assumed. A cap breach throws ResourceLimitError naming the k being tested.
std::optional<size_t> min_k_copy(
    const ProbVec &p,
    const ProbVec &q,
    const ThermalContext &ctx,
    size_t k_max = 12,
    Arithmetic arithmetic = Arithmetic::floating,
    size_t cap = kDefaultDimCap);

/// (d_S - 1) / (1 + (d_S - 1) log2 d_C).
double embezzlement_bound(uint64_t d_s, uint64_t d_c);

struct ConversionParams {
    double kappa;
    uint64_t n;
    ProbVec source;
    ProbVec target;
    ThermalContext source_ctx;
    ThermalContext target_ctx;
};

struct ConversionRate {
    double r_n = 0;
    uint64_t m = 0;
    double delta_bound = 0;
    double asymptotic = 0;
    double v = 0;
    bool clamped_low = false;
    bool clamped_high = false;
};

/// Finite-n conversion rate of n copies of source into copies of target, with the
/// second-order correction, the copy count m = floor(n r_n) and the error bound exp(-n^kappa).
ConversionRate conversion_rate(const ConversionParams &params);

/// 2 delta + nu.
double catalyst_error_budget(double delta, double nu);

/// (log2 D - H(duan)) / (log2 d_C - H(omega)), the number of omega copies whose entropy deficit
/// covers the Duan catalyst's.
double copies_lower_bound(const DuanSpec &duan, const ProbVec &omega);

/// Exact Gibbs weights: the rational form when exact, else the floating Gibbs entries.
std::vector<mpq_class> exact_gibbs_weights(const ThermalContext &ctx);

}  // namespace catlab

#endif
