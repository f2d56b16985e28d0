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


#include "majorization.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace catlab {

namespace {

// Stable beta-ordering: ratio p_i / g_i descending, ties by ascending index.
template <typename T, typename Ratio>
std::vector<size_t> beta_order(size_t n, Ratio ratio) {
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<T> r(n);
    for (size_t i = 0; i < n; i++) {
        r[i] = ratio(i);
    }
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return r[a] > r[b]; });
    return order;
}

void check_dims(const ProbVec &p, const ProbVec &q, const ThermalContext &ctx) {
    if (p.dim() != ctx.dim() || q.dim() != ctx.dim()) {
        throw std::invalid_argument(
            "state dimensions " + std::to_string(p.dim()) + " and " + std::to_string(q.dim()) +
            " do not match the thermal context dimension " + std::to_string(ctx.dim()));
    }
}

}  // namespace

OrderCheck majorization_check(const ProbVec &p, const ProbVec &q) {
    size_t n = std::max(p.dim(), q.dim());
    std::vector<double> a = sorted_desc(p.entries());
    std::vector<double> b = sorted_desc(q.entries());
    a.resize(n, 0.0);
    b.resize(n, 0.0);
    double sa = 0;
    double sb = 0;
    double margin = kInfinity;
    // The full sum is equal for both, so the last prefix carries no information.
    for (size_t k = 0; k + 1 < n; k++) {
        sa += a[k];
        sb += b[k];
        margin = std::min(margin, sa - sb);
    }
    if (n == 1) {
        margin = 0;
    }
    return {margin >= -kCompareTolerance, margin};
}

bool majorizes(const ProbVec &p, const ProbVec &q) {
    return majorization_check(p, q).holds;
}

double TMCurve::operator()(double x) const {
    if (x <= 0) {
        return 0;
    }
    if (x >= elbows.back().x) {
        return elbows.back().y;
    }
    auto it = std::upper_bound(
        elbows.begin(), elbows.end(), x, [](double v, const CurvePoint &pt) { return v < pt.x; });
    const CurvePoint &b = *it;
    const CurvePoint &a = *(it - 1);
    return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

TMCurve tm_curve(const ProbVec &p, const ProbVec &gibbs) {
    if (p.dim() != gibbs.dim()) {
        throw std::invalid_argument("state and Gibbs dimensions differ");
    }
    for (double g : gibbs.entries()) {
        if (!(g > 0)) {
            throw std::invalid_argument("thermo-majorization curve needs strictly positive Gibbs weights");
        }
    }
    TMCurve curve;
    curve.order = beta_order<double>(p.dim(), [&](size_t i) { return p[i] / gibbs[i]; });
    curve.elbows.reserve(p.dim() + 1);
    curve.elbows.push_back({0, 0});
    double x = 0;
    double y = 0;
    for (size_t i : curve.order) {
        x += gibbs[i];
        y += p[i];
        curve.elbows.push_back({x, y});
    }
    return curve;
}

TMCurve tm_curve(const ProbVec &p, const ThermalContext &ctx) {
    return tm_curve(p, ctx.gibbs());
}

OrderCheck thermo_majorization_check(const ProbVec &p, const ProbVec &q, const ThermalContext &ctx) {
    check_dims(p, q, ctx);
    if (ctx.is_degenerate()) {
        return majorization_check(p, q);
    }
    TMCurve cp = tm_curve(p, ctx);
    TMCurve cq = tm_curve(q, ctx);
    // Concave p-curve against a piecewise-linear q-curve: the elbows of q suffice.
    double margin = kInfinity;
    size_t seg = 1;
    const auto &ep = cp.elbows;
    for (size_t k = 1; k + 1 < cq.elbows.size(); k++) {
        double x = cq.elbows[k].x;
        while (seg + 1 < ep.size() && ep[seg].x < x) {
            seg++;
        }
        const CurvePoint &a = ep[seg - 1];
        const CurvePoint &b = ep[seg];
        double y = x >= b.x ? b.y : a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
        margin = std::min(margin, y - cq.elbows[k].y);
    }
    if (!std::isfinite(margin)) {
        margin = 0;
    }
    return {margin >= -kCompareTolerance, margin};
}

bool thermo_majorizes(const ProbVec &p, const ProbVec &q, const ThermalContext &ctx) {
    return thermo_majorization_check(p, q, ctx).holds;
}

std::vector<mpq_class> exact_entries(const ProbVec &p) {
    std::vector<mpq_class> out;
    out.reserve(p.dim());
    mpq_class total = 0;
    for (double x : p.entries()) {
        out.emplace_back(x);
        total += out.back();
    }
    if (total != 1) {
        for (auto &x : out) {
            x /= total;
        }
    }
    return out;
}

bool exact_majorizes(std::vector<mpq_class> p, std::vector<mpq_class> q) {
    size_t n = std::max(p.size(), q.size());
    p.resize(n, 0);
    q.resize(n, 0);
    std::sort(p.begin(), p.end(), std::greater<>());
    std::sort(q.begin(), q.end(), std::greater<>());
    mpq_class sp = 0;
    mpq_class sq = 0;
    for (size_t k = 0; k < n; k++) {
        sp += p[k];
        sq += q[k];
        if (sp < sq) {
            return false;
        }
    }
    return sp == sq;
}

bool exact_thermo_majorizes(
    std::span<const mpq_class> p, std::span<const mpq_class> q, std::span<const mpq_class> weights) {
    size_t n = weights.size();
    if (p.size() != n || q.size() != n) {
        throw std::invalid_argument("exact thermo-majorization needs matching dimensions");
    }
    auto curve = [&](std::span<const mpq_class> v) {
        auto order = beta_order<mpq_class>(n, [&](size_t i) { return mpq_class(v[i] / weights[i]); });
        std::vector<std::pair<mpq_class, mpq_class>> pts{{0, 0}};
        mpq_class x = 0;
        mpq_class y = 0;
        for (size_t i : order) {
            x += weights[i];
            y += v[i];
            pts.emplace_back(x, y);
        }
        return pts;
    };
    auto cp = curve(p);
    auto cq = curve(q);
    if (cp.back().second != cq.back().second) {
        return false;
    }
    size_t seg = 1;
    for (size_t k = 1; k < cq.size(); k++) {
        const mpq_class &x = cq[k].first;
        while (seg + 1 < cp.size() && cp[seg].first < x) {
            seg++;
        }
        const auto &a = cp[seg - 1];
        const auto &b = cp[seg];
        mpq_class y = x >= b.first ? b.second : mpq_class(a.second + (x - a.first) * (b.second - a.second) / (b.first - a.first));
        if (y < cq[k].second) {
            return false;
        }
    }
    return true;
}

ProbVec flattest_state(const ProbVec &q, double eps) {
    if (!(eps >= 0)) {
        throw std::invalid_argument("flattening budget must be nonnegative");
    }
    size_t n = q.dim();
    double u = 1.0 / (double)n;
    double saturation = 0;
    for (double x : q.entries()) {
        saturation += std::max(0.0, x - u);
    }
    if (eps == 0 || saturation == 0) {
        return q;
    }
    if (eps >= saturation) {
        return ProbVec::uniform(n);
    }
    std::vector<double> s = sorted_desc(q.entries());
    // Cap: the top j entries drop to c with sum_{i<j} (s_i - c) = eps and s_j <= c <= s_{j-1}.
    double cap = s[0];
    double head = 0;
    for (size_t j = 1; j <= n; j++) {
        head += s[j - 1];
        double c = (head - eps) / (double)j;
        if (j == n || c >= s[j]) {
            cap = c;
            break;
        }
    }
    double floor = s[n - 1];
    double tail = 0;
    for (size_t j = 1; j <= n; j++) {
        tail += s[n - j];
        double f = (tail + eps) / (double)j;
        if (j == n || f <= s[n - 1 - j]) {
            floor = f;
            break;
        }
    }
    std::vector<double> out(n);
    for (size_t i = 0; i < n; i++) {
        out[i] = std::clamp(q[i], floor, std::max(cap, floor));
    }
    return ProbVec(std::move(out));
}

bool eps_catalytic_step(
    const ProbVec &p, const ProbVec &q, const ProbVec &c, double eps, const ThermalContext &ctx, size_t cap) {
    if (!(eps >= 0) || eps > 1) {
        throw std::invalid_argument("catalyst error must lie in [0, 1]");
    }
    if (p.dim() != ctx.dim() || q.dim() != ctx.dim()) {
        throw std::invalid_argument("state dimensions do not match the thermal context");
    }
    ProbVec flat = flattest_state(c, eps);
    ProbVec lhs = tensor(p, c, cap);
    ProbVec rhs = tensor(q, flat, cap);
    if (ctx.is_degenerate()) {
        return majorizes(lhs, rhs);
    }
    return thermo_majorizes(lhs, rhs, tensor(ctx, ThermalContext::degenerate(c.dim()), cap));
}

}  // namespace catlab
