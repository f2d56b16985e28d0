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


#include "convex_split.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace catlab {

MixState mix_channel(const ProbVec &rho, const ProbVec &sigma, size_t m, size_t cap) {
    if (m < 1) {
        throw std::invalid_argument("mixing channel needs m >= 1");
    }
    if (rho.dim() != sigma.dim()) {
        throw std::invalid_argument("rho and sigma must have equal dimension");
    }
    size_t d = rho.dim();
    size_t regs = m + 1;
    size_t total = 1;
    for (size_t r = 0; r < regs; r++) {
        if (total > cap / d) {
            throw ResourceLimitError(
                "mixing channel with m=" + std::to_string(m) + " exceeds the dimension cap of " + std::to_string(cap),
                SIZE_MAX,
                cap);
        }
        total *= d;
    }

    std::vector<double> joint(total);
    std::vector<size_t> digit(regs, 0);
    std::vector<double> prefix(regs + 1);
    std::vector<double> suffix(regs + 1);
    double w = 1.0 / (double)regs;
    for (size_t idx = 0; idx < total; idx++) {
        prefix[0] = 1;
        for (size_t r = 0; r < regs; r++) {
            prefix[r + 1] = prefix[r] * sigma[digit[r]];
        }
        suffix[regs] = 1;
        for (size_t r = regs; r-- > 0;) {
            suffix[r] = suffix[r + 1] * sigma[digit[r]];
        }
        double acc = 0;
        for (size_t r = 0; r < regs; r++) {
            acc += prefix[r] * rho[digit[r]] * suffix[r + 1];
        }
        joint[idx] = w * acc;
        // Odometer increment, last register fastest.
        for (size_t r = regs; r-- > 0;) {
            if (++digit[r] < d) {
                break;
            }
            digit[r] = 0;
        }
    }
    return MixState{m, rho, sigma, ProbVec(std::move(joint))};
}

ProbVec register_marginal(const MixState &state, size_t reg) {
    if (reg > state.m) {
        throw std::invalid_argument("register index out of range");
    }
    size_t d = state.rho.dim();
    size_t stride = 1;
    for (size_t r = state.m; r > reg; r--) {
        stride *= d;
    }
    std::vector<double> out(d, 0.0);
    for (size_t idx = 0; idx < state.joint.dim(); idx++) {
        out[(idx / stride) % d] += state.joint[idx];
    }
    return ProbVec(std::move(out));
}

ProbVec catalyst_marginal(const MixState &state) {
    size_t d = state.rho.dim();
    size_t block = state.joint.dim() / d;
    std::vector<double> out(block, 0.0);
    for (size_t s = 0; s < d; s++) {
        for (size_t j = 0; j < block; j++) {
            out[j] += state.joint[s * block + j];
        }
    }
    return ProbVec(std::move(out));
}

double convex_split_bound(const ProbVec &rho, const ProbVec &sigma, size_t m) {
    if (m < 1) {
        throw std::invalid_argument("convex-split bound needs m >= 1");
    }
    double dmax = renyi_divergence(rho, sigma, kInfinity);
    return std::min(1.0, std::sqrt(std::exp2(dmax) / (double)m));
}

ConvexSplitCheck verify_convex_split(const ProbVec &rho, const ProbVec &sigma, size_t m, size_t cap) {
    ConvexSplitCheck out;
    out.m = m;
    out.bound = convex_split_bound(rho, sigma, m);
    MixState state = mix_channel(rho, sigma, m, cap);
    ProbVec target = tensor_power(sigma, m + 1, cap);
    out.empirical = trace_distance(state.joint, target);
    out.catalyst_distance = trace_distance(catalyst_marginal(state), tensor_power(sigma, m, cap));
    out.ok = out.empirical <= out.bound + kCompareTolerance;
    return out;
}

std::vector<ErrorCurvePoint> theorem1_error_curve(
    const ProbVec &rho,
    const ProbVec &sigma,
    const ProbVec &omega,
    const std::vector<uint64_t> &n_list,
    double kappa,
    const ThermalContext &system_ctx,
    const ThermalContext &omega_ctx) {
    double dmax = renyi_divergence(rho, sigma, kInfinity);
    double td = trace_distance(rho, sigma);
    std::vector<ErrorCurvePoint> out;
    for (uint64_t n : n_list) {
        ConversionRate rate = conversion_rate({kappa, n, omega, sigma, omega_ctx, system_ctx});
        ErrorCurvePoint pt;
        pt.n = n;
        pt.r_n = rate.r_n;
        pt.m = (double)n * rate.r_n;
        pt.delta = rate.delta_bound;
        if (rate.r_n > 0) {
            pt.nu_bound = std::sqrt(std::exp2(dmax) / pt.m);
            pt.eps_c_bound = catalyst_error_budget(pt.delta, pt.nu_bound);
        } else {
            pt.nu_bound = 1;
            pt.eps_c_bound = 1;
            pt.vacuous = true;
        }
        pt.eps_s_bound = pt.delta + td / (pt.m + 1);
        out.push_back(pt);
    }
    return out;
}

}  // namespace catlab
