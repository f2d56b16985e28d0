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

#ifndef CATLAB_ENTROPY_H
#define CATLAB_ENTROPY_H

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "simplex.h"

namespace catlab {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Gibbs weights written as d_i / D with positive integers d_i summing to D.
struct RationalGibbs {
    uint64_t denominator = 0;
    std::vector<uint64_t> numerators;
    /// True when d_i / D is the Gibbs state itself rather than an approximation of it.
    bool exact = false;

    bool operator==(const RationalGibbs &other) const = default;
};

/// Energy levels plus inverse temperature, with the derived Gibbs state and partition function.
///
/// Immutable after construction. A degenerate context (all energies equal) has the uniform
/// distribution as its Gibbs state and carries an exact rational form.
class ThermalContext {
   public:
    static ThermalContext from_energies(std::vector<double> energies, double beta);
    static ThermalContext degenerate(size_t dim);
    /// Context whose Gibbs state is exactly numerators[i] / sum(numerators).
    static ThermalContext from_rational_gibbs(std::vector<uint64_t> numerators, double beta = 1.0);

    size_t dim() const {
        return energies_.size();
    }
    std::span<const double> energies() const {
        return energies_;
    }
    double beta() const {
        return beta_;
    }
    const ProbVec &gibbs() const {
        return gibbs_;
    }
    /// Natural logarithm of the partition function.
    double log_z() const {
        return log_z_;
    }
    bool is_degenerate() const {
        return degenerate_;
    }
    const std::optional<RationalGibbs> &rational_form() const {
        return rational_;
    }
    bool has_exact_rational_form() const {
        return rational_.has_value() && rational_->exact;
    }
    ThermalContext with_rational_form(RationalGibbs form) const;

    friend ThermalContext tensor(const ThermalContext &a, const ThermalContext &b, size_t cap);

   private:
    ThermalContext() = default;
    std::vector<double> energies_;
    double beta_ = 1.0;
    ProbVec gibbs_;
    double log_z_ = 0;
    bool degenerate_ = false;
    std::optional<RationalGibbs> rational_;
};

/// Context of the composite system: energies add, Gibbs states multiply.
ThermalContext tensor(const ThermalContext &a, const ThermalContext &b, size_t cap = kDefaultDimCap);
ThermalContext tensor_power(const ThermalContext &a, size_t k, size_t cap = kDefaultDimCap);

/// Finite set of Renyi orders standing in for "all alpha >= 0".
struct AlphaGrid {
    std::vector<double> values;
    bool include_infinity = true;

    /// {0} U 120 log-spaced points in [1e-3, 1e3] U {1} U {inf}.
    static AlphaGrid default_grid();
    /// Sorts, deduplicates and adds 0 and 1. Rejects negative or non-finite entries.
    static AlphaGrid from_values(std::vector<double> alphas, bool include_infinity);

    /// Every order in the grid, with infinity last when included.
    std::vector<double> all() const;
};

// All entropic quantities below are in bits.

double shannon(const ProbVec &p);
/// alpha = 0 counts the support, alpha = 1 is Shannon, alpha = inf is min-entropy.
double renyi_entropy(const ProbVec &p, double alpha);
double entropy_variance(const ProbVec &p);
double relative_entropy(const ProbVec &p, const ProbVec &q);
double relative_entropy_variance(const ProbVec &p, const ProbVec &q);
/// D_alpha(p||q) = log2(sum p_i^alpha q_i^(1-alpha)) / (alpha - 1), with the 0, 1 and inf limits.
double renyi_divergence(const ProbVec &p, const ProbVec &q, double alpha);

/// F_alpha = (ln2 * D_alpha(p||g) - ln Z) / beta, in energy units.
double free_energy(const ProbVec &p, const ThermalContext &ctx, double alpha);

/// Splits entry i into d[i] equal parts.
ProbVec embed(const ProbVec &x, std::span<const uint64_t> d, size_t cap = kDefaultDimCap);

/// Best rational approximation d_i / D of the Gibbs weights over all D <= max_denominator.
///
/// For each D the integer allocation minimizing max_i |d_i / D - g_i| (with every d_i >= 1) is
/// found exactly; the D with the smallest error wins, smaller D on ties.
ThermalContext rationalize_gibbs(const ThermalContext &ctx, uint64_t max_denominator);

/// The minimax allocation for one fixed denominator.
std::vector<uint64_t> allocate_numerators(const ProbVec &g, uint64_t denominator);

}  // namespace catlab

#endif
