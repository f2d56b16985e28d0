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


#ifndef CATLAB_MAJORIZATION_H
#define CATLAB_MAJORIZATION_H

#include <gmpxx.h>

#include <span>
#include <vector>

#include "entropy.h"
#include "simplex.h"

namespace catlab {

/// Outcome of an order check. margin is the smallest gap between the two curves at the
/// checked abscissae; holds means margin >= -kCompareTolerance.
struct OrderCheck {
    bool holds = false;
    double margin = 0;
};

OrderCheck majorization_check(const ProbVec &p, const ProbVec &q);
/// Shorter vector is padded with zeros.
bool majorizes(const ProbVec &p, const ProbVec &q);

struct CurvePoint {
    double x;
    double y;
};

/// Thermo-majorization curve: elbows of the beta-ordered cumulative (Gibbs weight, probability)
/// pairs, starting at (0, 0).
struct TMCurve {
    std::vector<CurvePoint> elbows;
    /// order[k] is the original index placed k-th in the beta-ordering.
    std::vector<size_t> order;

    /// Piecewise-linear interpolation; x outside [0, last x] is clamped.
    double operator()(double x) const;
};

TMCurve tm_curve(const ProbVec &p, const ProbVec &gibbs);
TMCurve tm_curve(const ProbVec &p, const ThermalContext &ctx);

OrderCheck thermo_majorization_check(const ProbVec &p, const ProbVec &q, const ThermalContext &ctx);
bool thermo_majorizes(const ProbVec &p, const ProbVec &q, const ThermalContext &ctx);

/// Entries of p as exact rationals rescaled to sum to exactly one.
std::vector<mpq_class> exact_entries(const ProbVec &p);

/// Exact majorization of rational vectors. Zero slack; unequal totals never majorize.
bool exact_majorizes(std::vector<mpq_class> p, std::vector<mpq_class> q);
/// Exact thermo-majorization with Gibbs weights proportional to `weights`.
bool exact_thermo_majorizes(
    std::span<const mpq_class> p, std::span<const mpq_class> q, std::span<const mpq_class> weights);

/// Water-filling flattening: caps the largest entries and floors the smallest ones, moving
/// min(eps, saturation) mass, where saturation is the distance from q to uniform.
/// Returned entries keep q's index order.
ProbVec flattest_state(const ProbVec &q, double eps);

/// Does p (x) c reach q (x) flattest_state(c, eps) under thermal operations, with the catalyst
/// carrying a trivial Hamiltonian?
bool eps_catalytic_step(
    const ProbVec &p,
    const ProbVec &q,
    const ProbVec &c,
    double eps,
    const ThermalContext &ctx,
    size_t cap = kDefaultDimCap);

}  // namespace catlab

#endif
