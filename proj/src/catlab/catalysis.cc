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


#include "catalysis.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace catlab {

namespace {

// a * b, or ResourceLimitError if it would exceed cap.
size_t capped_product(size_t a, size_t b, size_t cap, const char *what) {
    if (a != 0 && b > cap / a) {
        throw ResourceLimitError(std::string(what) + " exceeds the dimension cap", SIZE_MAX, cap);
    }
    check_dim_cap(a * b, cap, what);
    return a * b;
}

size_t capped_power(size_t d, size_t k, size_t cap, const char *what) {
    size_t out = 1;
    for (size_t i = 0; i < k; i++) {
        out = capped_product(out, d, cap, what);
    }
    return out;
}

std::vector<mpq_class> exact_tensor(const std::vector<mpq_class> &a, const std::vector<mpq_class> &b) {
    std::vector<mpq_class> out;
    out.reserve(a.size() * b.size());
    for (const auto &x : a) {
        for (const auto &y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

std::vector<mpq_class> exact_power(const std::vector<mpq_class> &a, size_t k) {
    std::vector<mpq_class> out{1};
    for (size_t i = 0; i < k; i++) {
        out = exact_tensor(out, a);
    }
    return out;
}

bool exact_order(
    const std::vector<mpq_class> &p, const std::vector<mpq_class> &q, const std::vector<mpq_class> &weights, bool degenerate) {
    if (degenerate) {
        return exact_majorizes(p, q);
    }
    return exact_thermo_majorizes(p, q, weights);
}

}  // namespace

SecondLaws second_laws(const ProbVec &p, const ProbVec &q, const ThermalContext &ctx, const AlphaGrid &grid) {
    if (p.dim() != ctx.dim() || q.dim() != ctx.dim()) {
        throw std::invalid_argument("state dimensions do not match the thermal context");
    }
    SecondLaws out;
    out.margin = kInfinity;
    out.interior_margin = kInfinity;
    for (double a : grid.all()) {
        double gap = free_energy(p, ctx, a) - free_energy(q, ctx, a);
        if (gap < out.margin) {
            out.margin = gap;
            out.worst_alpha = a;
        }
        if (a > 0 && a < kInfinity) {
            out.interior_margin = std::min(out.interior_margin, gap);
        }
    }
    out.holds = out.margin >= -kSecondLawTolerance;
    // A violation found at a grid point is real; a pass is only as good as the sampling between
    // grid points. The endpoints 0 and inf are evaluated exactly and cannot hide a dip.
    out.grid_sensitive = out.holds && out.interior_margin <= kGridSensitivity;
    return out;
}

bool second_laws_holds(const ProbVec &p, const ProbVec &q, const ThermalContext &ctx, const AlphaGrid &grid) {
    return second_laws(p, q, ctx, grid).holds;
}

DuanSpec duan_state(const ProbVec &p, const ProbVec &q, size_t k, size_t cap) {
    if (k == 0) {
        throw std::invalid_argument("Duan state needs k >= 1");
    }
    if (p.dim() != q.dim()) {
        throw std::invalid_argument("Duan state needs states of equal dimension");
    }
    DuanSpec spec;
    spec.k = k;
    spec.p = p;
    spec.q = q;
    spec.block_dim = capped_power(p.dim(), k - 1, cap, "Duan state");
    spec.total_dim = capped_product(k, spec.block_dim, cap, "Duan state");
    for (size_t i = 1; i <= k; i++) {
        spec.blocks.push_back({k - i, i - 1});
    }
    return spec;
}

ProbVec DuanSpec::materialize(size_t cap) const {
    check_dim_cap(total_dim, cap, "Duan state");
    std::vector<WeightedBlock> parts;
    parts.reserve(blocks.size());
    double w = 1.0 / (double)k;
    for (const auto &b : blocks) {
        parts.push_back({w, tensor(tensor_power(q, b.q_power, cap), tensor_power(p, b.p_power, cap), cap)});
    }
    return direct_sum(parts, cap);
}

std::vector<mpq_class> DuanSpec::materialize_exact(size_t cap) const {
    check_dim_cap(total_dim, cap, "Duan state");
    auto pe = exact_entries(p);
    auto qe = exact_entries(q);
    mpq_class w(1, k);
    std::vector<mpq_class> out;
    out.reserve(total_dim);
    for (const auto &b : blocks) {
        for (const auto &x : exact_tensor(exact_power(qe, b.q_power), exact_power(pe, b.p_power))) {
            out.push_back(w * x);
        }
    }
    return out;
}

double DuanSpec::entropy() const {
    return std::log2((double)k) + 0.5 * (double)(k - 1) * (shannon(p) + shannon(q));
}

ThermalContext DuanSpec::context(const ThermalContext &system, size_t cap) const {
    return tensor(ThermalContext::degenerate(k), tensor_power(system, k - 1, cap), cap);
}

std::vector<mpq_class> exact_gibbs_weights(const ThermalContext &ctx) {
    if (ctx.is_degenerate()) {
        return std::vector<mpq_class>(ctx.dim(), mpq_class(1));
    }
    if (ctx.has_exact_rational_form()) {
        const auto &nums = ctx.rational_form()->numerators;
        std::vector<mpq_class> out;
        for (uint64_t d : nums) {
            out.emplace_back(mpz_class(std::to_string(d)));
        }
        return out;
    }
    return exact_entries(ctx.gibbs());
}

bool kcopy_transformable(
    const ProbVec &p, const ProbVec &q, size_t k, const ThermalContext &ctx, Arithmetic arithmetic, size_t cap) {
    if (p.dim() != ctx.dim() || q.dim() != ctx.dim()) {
        throw std::invalid_argument("state dimensions do not match the thermal context");
    }
    capped_power(p.dim(), k, cap, "k-copy state");
    if (arithmetic == Arithmetic::exact) {
        auto w = exact_power(exact_gibbs_weights(ctx), k);
        return exact_order(exact_power(exact_entries(p), k), exact_power(exact_entries(q), k), w, ctx.is_degenerate());
    }
    ProbVec pk = tensor_power(p, k, cap);
    ProbVec qk = tensor_power(q, k, cap);
    if (ctx.is_degenerate()) {
        return majorizes(pk, qk);
    }
    return thermo_majorizes(pk, qk, tensor_power(ctx, k, cap));
}

DuanCheck duan_catalysis_check(
    const ProbVec &p, const ProbVec &q, size_t k, const ThermalContext &ctx, Arithmetic arithmetic, size_t cap) {
    if (p.dim() != ctx.dim() || q.dim() != ctx.dim()) {
        throw std::invalid_argument("state dimensions do not match the thermal context");
    }
    DuanSpec duan = duan_state(p, q, k, cap);
    capped_product(p.dim(), duan.total_dim, cap, "state with Duan catalyst");

    auto decide_exact = [&]() {
        DuanCheck out;
        out.kcopy_ok = kcopy_transformable(p, q, k, ctx, Arithmetic::exact, cap);
        auto omega = duan.materialize_exact(cap);
        auto w = exact_tensor(exact_gibbs_weights(ctx), exact_tensor(std::vector<mpq_class>(k, mpq_class(1)), exact_power(exact_gibbs_weights(ctx), k - 1)));
        out.catalytic_ok = exact_order(
            exact_tensor(exact_entries(p), omega), exact_tensor(exact_entries(q), omega), w, ctx.is_degenerate());
        return out;
    };

    DuanCheck out;
    if (arithmetic == Arithmetic::exact) {
        out = decide_exact();
    } else {
        out.kcopy_ok = kcopy_transformable(p, q, k, ctx, Arithmetic::floating, cap);
        ProbVec omega = duan.materialize(cap);
        ProbVec lhs = tensor(p, omega, cap);
        ProbVec rhs = tensor(q, omega, cap);
        if (ctx.is_degenerate()) {
            out.catalytic_ok = majorizes(lhs, rhs);
        } else {
            out.catalytic_ok = thermo_majorizes(lhs, rhs, tensor(ctx, duan.context(ctx, cap), cap));
        }
        if (out.kcopy_ok && !out.catalytic_ok) {
            out = decide_exact();
        }
    }
    if (out.kcopy_ok && !out.catalytic_ok) {
        throw std::logic_error(
            "k-copy transformation holds but the Duan catalyst fails for k=" + std::to_string(k) + ", p=" + p.str() +
            ", q=" + q.str());
    }
    return out;
}

std::optional<size_t> min_k_copy(
    const ProbVec &p, const ProbVec &q, const ThermalContext &ctx, size_t k_max, Arithmetic arithmetic, size_t cap) {
    for (size_t k = 1; k <= k_max; k++) {
        try {
            if (kcopy_transformable(p, q, k, ctx, arithmetic, cap)) {
                return k;
            }
        } catch (const ResourceLimitError &e) {
            throw ResourceLimitError(
                "k-copy search reached k=" + std::to_string(k) + " before hitting the dimension cap: " + e.what(),
                e.requested,
                e.cap);
        }
    }
    return std::nullopt;
}

double embezzlement_bound(uint64_t d_s, uint64_t d_c) {
    if (d_s < 2 || d_c < 2) {
        throw std::invalid_argument("embezzlement bound needs d_S >= 2 and d_C >= 2");
    }
    double a = (double)(d_s - 1);
    return a / (1 + a * std::log2((double)d_c));
}

ConversionRate conversion_rate(const ConversionParams &params) {
    if (!(params.kappa > 0 && params.kappa < 1)) {
        throw std::invalid_argument("kappa must lie strictly between 0 and 1");
    }
    if (params.n < 1) {
        throw std::invalid_argument("copy count n must be >= 1");
    }
    const ProbVec &gs = params.source_ctx.gibbs();
    const ProbVec &gt = params.target_ctx.gibbs();
    double d_src = relative_entropy(params.source, gs);
    double d_tgt = relative_entropy(params.target, gt);
    if (d_tgt <= 0) {
        throw DomainError("conversion rate undefined: the target is the Gibbs state");
    }
    double v_src = relative_entropy_variance(params.source, gs);
    double v_tgt = relative_entropy_variance(params.target, gt);
    if (d_src <= 0 || v_src <= 0 || v_tgt <= 0) {
        throw DomainError("conversion rate undefined: a relative entropy variance ratio degenerates");
    }
    ConversionRate out;
    out.v = (v_src / d_src) / (v_tgt / d_tgt);
    out.asymptotic = d_src / d_tgt;
    double n = (double)params.n;
    double correction = std::sqrt(2 * v_src / d_src) * std::abs(1 - 1 / std::sqrt(out.v)) / std::sqrt(std::pow(n, 1 - params.kappa));
    double r = out.asymptotic * (1 - correction);
    if (r < 0) {
        r = 0;
        out.clamped_low = true;
    }
    if (r > out.asymptotic) {
        r = out.asymptotic;
        out.clamped_high = true;
    }
    out.r_n = r;
    out.m = (uint64_t)std::floor(n * r);
    out.delta_bound = std::exp(-std::pow(n, params.kappa));
    return out;
}

double catalyst_error_budget(double delta, double nu) {
    if (!(delta >= 0) || !(nu >= 0)) {
        throw std::invalid_argument("error terms must be nonnegative");
    }
    return 2 * delta + nu;
}

double copies_lower_bound(const DuanSpec &duan, const ProbVec &omega) {
    double deficit = std::log2((double)omega.dim()) - shannon(omega);
    if (!(deficit > 0)) {
        throw DomainError("a uniform catalyst copy carries no entropy deficit; no finite copy count suffices");
    }
    double need = std::log2((double)duan.total_dim) - duan.entropy();
    return std::max(0.0, need) / deficit;
}

}  // namespace catlab
