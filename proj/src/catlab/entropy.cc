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

#include "entropy.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace catlab {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// log(sum(exp(x))) over the given exponents; -inf for an empty list.
double log_sum_exp(const std::vector<double> &xs) {
    if (xs.empty()) {
        return -kInfinity;
    }
    double top = *std::max_element(xs.begin(), xs.end());
    if (!std::isfinite(top)) {
        return top;
    }
    double total = 0;
    for (double x : xs) {
        total += std::exp(x - top);
    }
    return top + std::log(total);
}

void check_alpha(double alpha) {
    if (std::isnan(alpha) || alpha < 0) {
        throw std::invalid_argument("Renyi order must be >= 0 (got " + std::to_string(alpha) + ")");
    }
}

void check_same_dim(const ProbVec &p, const ProbVec &q) {
    if (p.dim() != q.dim()) {
        throw std::invalid_argument(
            "dimension mismatch: " + std::to_string(p.dim()) + " vs " + std::to_string(q.dim()));
    }
}

[[noreturn]] void support_violation(size_t index) {
    throw DomainError(
        "support violation at index " + std::to_string(index) + ": p_i > 0 but q_i = 0");
}

}  // namespace

ThermalContext ThermalContext::from_energies(std::vector<double> energies, double beta) {
    if (energies.empty()) {
        throw std::invalid_argument("thermal context needs at least one energy level");
    }
    if (!(beta > 0) || !std::isfinite(beta)) {
        throw std::invalid_argument("inverse temperature must be positive and finite");
    }
    double e_min = kInfinity;
    double e_max = -kInfinity;
    for (double e : energies) {
        if (!std::isfinite(e)) {
            throw std::invalid_argument("energy levels must be finite");
        }
        e_min = std::min(e_min, e);
        e_max = std::max(e_max, e);
    }
    ThermalContext ctx;
    ctx.beta_ = beta;
    ctx.degenerate_ = e_min == e_max;
    std::vector<double> w(energies.size());
    double total = 0;
    for (size_t i = 0; i < energies.size(); i++) {
        w[i] = std::exp(-beta * (energies[i] - e_min));
        total += w[i];
    }
    for (double &x : w) {
        x /= total;
    }
    for (double x : w) {
        if (!(x > 0)) {
            throw std::invalid_argument("Gibbs weight underflows to zero; energy spread too large for beta");
        }
    }
    ctx.log_z_ = -beta * e_min + std::log(total);
    ctx.energies_ = std::move(energies);
    if (ctx.degenerate_) {
        ctx.gibbs_ = ProbVec::uniform(ctx.energies_.size());
        ctx.rational_ = RationalGibbs{ctx.energies_.size(), std::vector<uint64_t>(ctx.energies_.size(), 1), true};
    } else {
        ctx.gibbs_ = ProbVec(std::move(w));
    }
    return ctx;
}

ThermalContext ThermalContext::degenerate(size_t dim) {
    return from_energies(std::vector<double>(dim, 0.0), 1.0);
}

ThermalContext ThermalContext::from_rational_gibbs(std::vector<uint64_t> numerators, double beta) {
    if (numerators.empty()) {
        throw std::invalid_argument("rational Gibbs state needs at least one entry");
    }
    uint64_t den = 0;
    for (uint64_t d : numerators) {
        if (d == 0) {
            throw std::invalid_argument("rational Gibbs numerators must be positive");
        }
        den += d;
    }
    if (std::all_of(numerators.begin(), numerators.end(), [&](uint64_t d) { return d == numerators[0]; })) {
        return degenerate(numerators.size());
    }
    if (!(beta > 0) || !std::isfinite(beta)) {
        throw std::invalid_argument("inverse temperature must be positive and finite");
    }
    ThermalContext ctx;
    ctx.beta_ = beta;
    std::vector<double> g(numerators.size());
    ctx.energies_.resize(numerators.size());
    for (size_t i = 0; i < numerators.size(); i++) {
        g[i] = (double)numerators[i] / (double)den;
        // Energies chosen so that Z = 1.
        ctx.energies_[i] = -std::log((double)numerators[i] / (double)den) / beta;
    }
    ctx.gibbs_ = ProbVec(std::move(g));
    ctx.log_z_ = 0;
    ctx.rational_ = RationalGibbs{den, std::move(numerators), true};
    return ctx;
}

ThermalContext ThermalContext::with_rational_form(RationalGibbs form) const {
    if (form.numerators.size() != dim()) {
        throw std::invalid_argument("rational form has the wrong dimension");
    }
    uint64_t total = 0;
    for (uint64_t d : form.numerators) {
        if (d == 0) {
            throw std::invalid_argument("rational Gibbs numerators must be positive");
        }
        total += d;
    }
    if (total != form.denominator) {
        throw std::invalid_argument("rational Gibbs numerators do not sum to the denominator");
    }
    ThermalContext copy = *this;
    copy.rational_ = std::move(form);
    return copy;
}

ThermalContext tensor(const ThermalContext &a, const ThermalContext &b, size_t cap) {
    double beta;
    if (a.is_degenerate()) {
        beta = b.beta();
    } else if (b.is_degenerate()) {
        beta = a.beta();
    } else {
        if (std::abs(a.beta() - b.beta()) > 1e-12 * std::max(a.beta(), b.beta())) {
            throw std::invalid_argument("cannot combine thermal contexts at different temperatures");
        }
        beta = a.beta();
    }
    ThermalContext out;
    out.beta_ = beta;
    out.gibbs_ = tensor(a.gibbs(), b.gibbs(), cap);
    out.energies_.resize(a.dim() * b.dim());
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < b.dim(); j++) {
            out.energies_[i * b.dim() + j] = a.energies()[i] + b.energies()[j];
        }
    }
    out.log_z_ = a.log_z() + b.log_z();
    out.degenerate_ = a.is_degenerate() && b.is_degenerate();
    if (a.rational_form() && b.rational_form()) {
        const auto &ra = *a.rational_form();
        const auto &rb = *b.rational_form();
        RationalGibbs r;
        r.denominator = ra.denominator * rb.denominator;
        r.exact = ra.exact && rb.exact;
        r.numerators.resize(a.dim() * b.dim());
        for (size_t i = 0; i < a.dim(); i++) {
            for (size_t j = 0; j < b.dim(); j++) {
                r.numerators[i * b.dim() + j] = ra.numerators[i] * rb.numerators[j];
            }
        }
        out.rational_ = std::move(r);
    }
    return out;
}

ThermalContext tensor_power(const ThermalContext &a, size_t k, size_t cap) {
    ThermalContext out = ThermalContext::degenerate(1);
    for (size_t i = 0; i < k; i++) {
        out = tensor(out, a, cap);
    }
    return out;
}

AlphaGrid AlphaGrid::default_grid() {
    std::vector<double> v;
    constexpr int kPoints = 120;
    for (int i = 0; i < kPoints; i++) {
        double e = -3.0 + 6.0 * i / (kPoints - 1);
        v.push_back(std::pow(10.0, e));
    }
    return from_values(std::move(v), true);
}

AlphaGrid AlphaGrid::from_values(std::vector<double> alphas, bool include_infinity) {
    for (double a : alphas) {
        if (!std::isfinite(a) || a < 0) {
            throw std::invalid_argument("alpha grid values must be finite and nonnegative");
        }
    }
    alphas.push_back(0.0);
    alphas.push_back(1.0);
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    return AlphaGrid{std::move(alphas), include_infinity};
}

std::vector<double> AlphaGrid::all() const {
    std::vector<double> out = values;
    if (include_infinity) {
        out.push_back(kInfinity);
    }
    return out;
}

double shannon(const ProbVec &p) {
    double h = 0;
    for (double x : p.entries()) {
        if (x > 0) {
            h -= x * std::log2(x);
        }
    }
    return h;
}

double renyi_entropy(const ProbVec &p, double alpha) {
    check_alpha(alpha);
    if (alpha == 0) {
        return std::log2((double)p.support_size());
    }
    if (alpha == 1) {
        return shannon(p);
    }
    if (std::isinf(alpha)) {
        return -std::log2(p.max());
    }
    std::vector<double> xs;
    for (double x : p.entries()) {
        if (x > 0) {
            xs.push_back(alpha * std::log(x));
        }
    }
    return log_sum_exp(xs) / (1 - alpha) / kLn2;
}

double entropy_variance(const ProbVec &p) {
    double h = shannon(p);
    double v = 0;
    for (double x : p.entries()) {
        if (x > 0) {
            double s = -std::log2(x) - h;
            v += x * s * s;
        }
    }
    return v;
}

double relative_entropy(const ProbVec &p, const ProbVec &q) {
    check_same_dim(p, q);
    double d = 0;
    for (size_t i = 0; i < p.dim(); i++) {
        if (p[i] > 0) {
            if (q[i] <= 0) {
                support_violation(i);
            }
            d += p[i] * std::log2(p[i] / q[i]);
        }
    }
    return std::max(0.0, d);
}

double relative_entropy_variance(const ProbVec &p, const ProbVec &q) {
    double d = relative_entropy(p, q);
    double v = 0;
    for (size_t i = 0; i < p.dim(); i++) {
        if (p[i] > 0) {
            double s = std::log2(p[i] / q[i]) - d;
            v += p[i] * s * s;
        }
    }
    return v;
}

double renyi_divergence(const ProbVec &p, const ProbVec &q, double alpha) {
    check_alpha(alpha);
    check_same_dim(p, q);
    if (alpha == 1) {
        return relative_entropy(p, q);
    }
    if (alpha == 0) {
        double mass = 0;
        for (size_t i = 0; i < p.dim(); i++) {
            if (p[i] > 0) {
                mass += q[i];
            }
        }
        return mass > 0 ? std::max(0.0, -std::log2(mass)) : kInfinity;
    }
    if (std::isinf(alpha)) {
        double best = 0;
        for (size_t i = 0; i < p.dim(); i++) {
            if (p[i] > 0) {
                if (q[i] <= 0) {
                    support_violation(i);
                }
                best = std::max(best, p[i] / q[i]);
            }
        }
        return std::max(0.0, std::log2(best));
    }
    std::vector<double> xs;
    for (size_t i = 0; i < p.dim(); i++) {
        if (p[i] <= 0) {
            continue;
        }
        if (q[i] <= 0) {
            if (alpha > 1) {
                support_violation(i);
            }
            continue;
        }
        xs.push_back(alpha * std::log(p[i]) + (1 - alpha) * std::log(q[i]));
    }
    double lse = log_sum_exp(xs);
    if (std::isinf(lse)) {
        return kInfinity;
    }
    return std::max(0.0, lse / (alpha - 1) / kLn2);
}

double free_energy(const ProbVec &p, const ThermalContext &ctx, double alpha) {
    if (p.dim() != ctx.dim()) {
        throw std::invalid_argument("state and thermal context dimensions differ");
    }
    return (kLn2 * renyi_divergence(p, ctx.gibbs(), alpha) - ctx.log_z()) / ctx.beta();
}

ProbVec embed(const ProbVec &x, std::span<const uint64_t> d, size_t cap) {
    if (d.size() != x.dim()) {
        throw std::invalid_argument("embedding needs one multiplicity per entry");
    }
    uint64_t total = 0;
    for (uint64_t di : d) {
        if (di == 0) {
            throw std::invalid_argument("embedding multiplicities must be positive");
        }
        total += di;
    }
    check_dim_cap(total, cap, "embedding");
    std::vector<double> out;
    out.reserve(total);
    for (size_t i = 0; i < d.size(); i++) {
        double share = x[i] / (double)d[i];
        out.insert(out.end(), d[i], share);
    }
    return ProbVec(std::move(out));
}

std::vector<uint64_t> allocate_numerators(const ProbVec &g, uint64_t denominator) {
    size_t n = g.dim();
    if (denominator < n) {
        throw std::invalid_argument(
            "denominator " + std::to_string(denominator) + " cannot give " + std::to_string(n) +
            " positive numerators");
    }
    std::vector<uint64_t> d(n);
    int64_t sum = 0;
    for (size_t i = 0; i < n; i++) {
        double target = g[i] * (double)denominator;
        d[i] = std::max<uint64_t>(1, (uint64_t)std::llround(target));
        sum += (int64_t)d[i];
    }
    auto excess = [&](size_t i) { return (double)d[i] - g[i] * (double)denominator; };
    // Greedy unit moves keep the largest deviation minimal; ties go to the lower index.
    while (sum > (int64_t)denominator) {
        size_t best = n;
        for (size_t i = 0; i < n; i++) {
            if (d[i] > 1 && (best == n || excess(i) > excess(best))) {
                best = i;
            }
        }
        d[best]--;
        sum--;
    }
    while (sum < (int64_t)denominator) {
        size_t best = 0;
        for (size_t i = 1; i < n; i++) {
            if (excess(i) < excess(best)) {
                best = i;
            }
        }
        d[best]++;
        sum++;
    }
    return d;
}

ThermalContext rationalize_gibbs(const ThermalContext &ctx, uint64_t max_denominator) {
    const ProbVec &g = ctx.gibbs();
    if (max_denominator < g.dim()) {
        throw std::invalid_argument(
            "max denominator " + std::to_string(max_denominator) + " is below the number of levels " +
            std::to_string(g.dim()));
    }
    double best_err = kInfinity;
    std::vector<uint64_t> best;
    uint64_t best_den = 0;
    for (uint64_t den = g.dim(); den <= max_denominator; den++) {
        auto d = allocate_numerators(g, den);
        double err = 0;
        for (size_t i = 0; i < d.size(); i++) {
            err = std::max(err, std::abs((double)d[i] / (double)den - g[i]));
        }
        if (err < best_err) {
            best_err = err;
            best = std::move(d);
            best_den = den;
        }
        if (err == 0) {
            break;
        }
    }
    bool exact = best_err == 0 || ctx.is_degenerate();
    return ctx.with_rational_form(RationalGibbs{best_den, std::move(best), exact});
}

}  // namespace catlab
