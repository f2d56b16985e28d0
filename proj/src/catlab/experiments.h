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


#ifndef CATLAB_EXPERIMENTS_H
#define CATLAB_EXPERIMENTS_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entropy.h"
#include "sampling.h"
#include "simplex.h"
#include "table.h"

namespace catlab {

enum class TargetClass { thermal, catalytic_only, unreachable };

std::string to_string(TargetClass c);

struct Classification {
    TargetClass cls = TargetClass::unreachable;
    bool grid_sensitive = false;
};

/// thermal: p thermo-majorizes q. catalytic_only: not thermal, but the second laws hold.
Classification classify_target(const ProbVec &p, const ProbVec &q, const ThermalContext &ctx, const AlphaGrid &grid);

/// mu * embezzlement_bound(d_s, d_c).
double catalyst_error(uint64_t d_s, uint64_t d_c, double mu);

struct PsuccEstimate {
    BernoulliEstimate estimate;
    /// Catalysts whose check hit the dimension cap; excluded from the trials.
    size_t cap_breaches = 0;
    /// p already thermo-majorizes q, so every catalyst succeeds.
    bool direct = false;
    /// Per-catalyst outcomes, in catalyst order (empty when direct).
    std::vector<bool> outcomes;
};

/// Fraction of catalysts c with p (x) c -> q (x) flattest(c, eps).
PsuccEstimate estimate_psucc(
    const ProbVec &p,
    const ProbVec &q,
    const ThermalContext &ctx,
    const std::vector<ProbVec> &catalysts,
    double eps);

/// Flat-Dirichlet targets; target j uses seed.child(j).
std::vector<ProbVec> sample_targets(size_t d_s, size_t count, Seed seed);

/// Lattice points of the simplex with spacing 1/steps (all compositions of steps into d_s parts).
std::vector<ProbVec> grid_targets(size_t d_s, uint64_t steps, size_t cap = kDefaultDimCap);

struct FEstimate {
    /// Undefined when the catalytic activation set is empty.
    std::optional<double> f;
    size_t sampled = 0;
    size_t in_s = 0;
    size_t in_t = 0;
    size_t in_d = 0;
    size_t above = 0;
    size_t grid_sensitive = 0;
    size_t cap_breaches = 0;
};

/// Share of targets in the activation set D(p) whose success probability reaches gamma.
FEstimate estimate_f(
    const ProbVec &p,
    const std::vector<ProbVec> &targets,
    const ThermalContext &ctx,
    const AlphaGrid &grid,
    const std::vector<ProbVec> &catalysts,
    double eps,
    double gamma);

struct KCopyPoint {
    size_t k = 0;
    double fraction = 0;
    double ci95 = 0;
};

struct KCopyPair {
    ProbVec p;
    ProbVec q;
    bool activated = false;
    /// Smallest k <= k_max with p^k -> q^k, for activated pairs.
    std::optional<size_t> min_k;
    /// The k whose check exceeded the dimension cap, if any.
    std::optional<size_t> cap_breach_at;
};

struct KCopyCurve {
    std::vector<KCopyPoint> points;
    std::vector<KCopyPair> pairs;
    size_t n_activated = 0;
    size_t cap_breaches = 0;
};

/// Among sampled catalytically activated pairs, the share transformable with some k' <= k copies,
/// for k = 1..k_max. Pair i uses seed.child(i).
KCopyCurve kcopy_fraction(
    size_t d_s,
    const ThermalContext &ctx,
    const AlphaGrid &grid,
    size_t n_pairs,
    size_t k_max,
    Seed seed,
    size_t cap = kDefaultDimCap);

/// Pair-level k-copy search with the prefilters used by kcopy_fraction. For a degenerate
/// context, p^k majorizes q^k only if p_min <= q_min, so such pairs are settled without search.
std::optional<size_t> min_k_copy_filtered(
    const ProbVec &p, const ProbVec &q, const ThermalContext &ctx, size_t k_max, size_t cap = kDefaultDimCap);

struct MuGamma {
    double mu = 0.1;
    double gamma = 0.9;

    bool operator==(const MuGamma &other) const = default;
};

/// How fig4 picks its targets: n flat-Dirichlet samples or the lattice with the given spacing.
struct TargetSpec {
    enum class Mode { sample, grid };
    Mode mode = Mode::sample;
    size_t count = 0;
    double step = 0;

    /// "sample", "sample:<N>" or "grid:<step>"; a bare "sample" takes default_count.
    static TargetSpec parse(const std::string &text, size_t default_count);
    std::string str() const;
};

struct ExperimentConfig {
    std::string experiment;
    size_t d_s = 3;
    std::vector<uint64_t> d_c;
    /// (mu, gamma) settings; the catalyst error is mu * eps_bnd.
    std::vector<MuGamma> settings{MuGamma{}};
    size_t n_c = 500;
    size_t n_s = 2000;
    std::vector<Sampler> samplers;
    uint64_t seed = 0;
    /// Empty energies mean a degenerate Hamiltonian.
    std::vector<double> energies;
    double beta = 1.0;
    std::optional<ProbVec> p;
    std::optional<ProbVec> q;
    size_t k_max = 8;
    size_t n_pairs = 2000;
    size_t n_inputs = 100;
    std::vector<double> r_values;
    std::vector<uint64_t> n_values;
    std::string targets = "sample";
    size_t boundary_resolution = 150;

    ThermalContext context() const;
    /// Throws std::invalid_argument describing the first problem.
    void validate() const;
};

/// Shipped configurations: fig2..fig6, appendix-d4, appendix-d5.
std::vector<std::string> preset_names();
ExperimentConfig preset(const std::string &name);

struct ExperimentResult {
    /// File name to table, for example "fig2.csv".
    std::map<std::string, Table> tables;
    size_t cap_breaches = 0;
    size_t grid_sensitive = 0;
    std::vector<std::string> warnings;
};

/// Runs cfg.experiment. Output depends only on the config, never on thread count.
ExperimentResult run_experiment(const ExperimentConfig &cfg);

}  // namespace catlab

#endif
