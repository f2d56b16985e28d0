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


#ifndef CATLAB_CONVEX_SPLIT_H
#define CATLAB_CONVEX_SPLIT_H

#include <cstdint>
#include <vector>

#include "catalysis.h"
#include "entropy.h"
#include "simplex.h"

namespace catlab {

/// Largest joint register space built by default: d=2 up to m=14, d=3 up to m=9.
constexpr size_t kDefaultMixCap = 65535;

/// Output of the swap-mixing channel on rho (x) sigma^m.
///
/// joint is indexed in mixed radix with register 0 (the system) most significant, followed by
/// catalyst registers 1..m.
struct MixState {
    size_t m = 0;
    ProbVec rho;
    ProbVec sigma;
    ProbVec joint;

    size_t registers() const {
        return m + 1;
    }
};

/// (1/(m+1)) sum_{i=0..m} of the product state with rho in register i and sigma elsewhere.
MixState mix_channel(const ProbVec &rho, const ProbVec &sigma, size_t m, size_t cap = kDefaultMixCap);

/// Marginal distribution of one register (0 = system).
ProbVec register_marginal(const MixState &state, size_t reg);
/// Joint marginal of the catalyst registers 1..m.
ProbVec catalyst_marginal(const MixState &state);

/// min(1, sqrt(2^D_inf(rho||sigma) / m)).
double convex_split_bound(const ProbVec &rho, const ProbVec &sigma, size_t m);

struct ConvexSplitCheck {
    size_t m = 0;
    /// Trace distance of the joint output from sigma^(m+1).
    double empirical = 0;
    double bound = 0;
    /// Trace distance of the catalyst marginal from sigma^m.
    double catalyst_distance = 0;
    bool ok = false;

    double ratio() const {
        return bound > 0 ? empirical / bound : 0;
    }
};

ConvexSplitCheck verify_convex_split(const ProbVec &rho, const ProbVec &sigma, size_t m, size_t cap = kDefaultMixCap);

struct ErrorCurvePoint {
    uint64_t n = 0;
    double r_n = 0;
    /// n * r_n, the (real) number of target copies prepared from the catalyst.
    double m = 0;
    double delta = 0;
    double nu_bound = 0;
    double eps_c_bound = 0;
    double eps_s_bound = 0;
    /// r_n = 0: no copies prepared, catalyst bound reported as 1.
    bool vacuous = false;
};

/// Catalyst and system error bounds of the embezzling protocol that converts omega^n into
/// sigma^(n r_n) and mixes rho into those copies.
std::vector<ErrorCurvePoint> theorem1_error_curve(
    const ProbVec &rho,
    const ProbVec &sigma,
    const ProbVec &omega,
    const std::vector<uint64_t> &n_list,
    double kappa,
    const ThermalContext &system_ctx,
    const ThermalContext &omega_ctx);

}  // namespace catlab

#endif
