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


#include "catlab/entropy.h"

#include <cmath>

#include "gtest/gtest.h"

using namespace catlab;

namespace {

const ProbVec kP({0.65, 0.2, 0.15});
const ProbVec kQ({0.5, 0.4, 0.1});

}  // namespace

TEST(entropy, shannon) {
    ASSERT_EQ(shannon(ProbVec({1.0, 0.0, 0.0})), 0);
    ASSERT_NEAR(shannon(ProbVec::uniform(8)), 3, 1e-14);
    long double h = 0;
    for (long double x : {0.65L, 0.2L, 0.15L}) {
        h -= x * std::log2(x);
    }
    ASSERT_NEAR(shannon(kP), (double)h, 1e-14);
}

TEST(entropy, renyi_entropy) {
    for (double a : {0.0, 0.3, 1.0, 2.0, 7.5, kInfinity}) {
        ASSERT_NEAR(renyi_entropy(ProbVec::uniform(5), a), std::log2(5.0), 1e-12) << a;
    }
    ASSERT_NEAR(renyi_entropy(kP, kInfinity), -std::log2(0.65), 1e-15);
    ASSERT_NEAR(renyi_entropy(ProbVec::uniform(2), 2), 1, 1e-15);
    ASSERT_NEAR(renyi_entropy(ProbVec({0.5, 0.5, 0.0}), 0), 1, 1e-15);
    ASSERT_NEAR(renyi_entropy(kP, 2), -std::log2(0.65 * 0.65 + 0.04 + 0.0225), 1e-14);
    // Continuity at alpha = 1.
    ASSERT_NEAR(renyi_entropy(kP, 1 + 1e-7), shannon(kP), 1e-6);
    ASSERT_THROW(renyi_entropy(kP, -0.5), std::invalid_argument);
}

TEST(entropy, relative_entropy_and_variances) {
    ASSERT_EQ(relative_entropy(kP, kP), 0);
    ASSERT_EQ(relative_entropy_variance(kP, kP), 0);
    ASSERT_NEAR(relative_entropy(ProbVec::uniform(2), ProbVec({0.75, 0.25})), 1 - 0.5 * std::log2(3.0), 1e-15);
    ASSERT_NEAR(entropy_variance(ProbVec::uniform(7)), 0, 1e-15);

    // Two-point law: surprisal takes two values, variance is p(1-p) (log2(p/(1-p)))^2.
    double v = entropy_variance(ProbVec({0.25, 0.75}));
    ASSERT_NEAR(v, 0.25 * 0.75 * std::pow(std::log2(3.0), 2), 1e-14);

    try {
        relative_entropy(ProbVec({0.5, 0.5}), ProbVec({1.0, 0.0}));
        FAIL();
    } catch (const DomainError &e) {
        ASSERT_NE(std::string(e.what()).find("index 1"), std::string::npos);
    }
}

TEST(entropy, renyi_divergence) {
    for (double a : {0.0, 0.5, 1.0, 3.0, kInfinity}) {
        ASSERT_NEAR(renyi_divergence(kP, kP, a), 0, 1e-14);
    }
    ASSERT_NEAR(renyi_divergence(ProbVec({0.6, 0.4}), ProbVec::uniform(2), kInfinity), std::log2(1.2), 1e-15);
    ProbVec partial({0.5, 0.5, 0.0});
    ASSERT_NEAR(renyi_divergence(partial, kQ, 0), -std::log2(0.9), 1e-15);
    ASSERT_NEAR(renyi_divergence(kP, kQ, 1), relative_entropy(kP, kQ), 0);
    ASSERT_NEAR(renyi_divergence(kP, kQ, 1 + 1e-7), relative_entropy(kP, kQ), 1e-6);
    ASSERT_NEAR(renyi_divergence(kP, kQ, 2), std::log2(0.65 * 0.65 / 0.5 + 0.04 / 0.4 + 0.0225 / 0.1), 1e-14);

    ProbVec q0({0.5, 0.5, 0.0});
    ASSERT_THROW(renyi_divergence(kP, q0, 2), DomainError);
    ASSERT_THROW(renyi_divergence(kP, q0, kInfinity), DomainError);
    ASSERT_NO_THROW(renyi_divergence(kP, q0, 0.5));
}

TEST(entropy, monotone_in_alpha) {
    auto rng = make_engine(Seed{21, 0});
    auto grid = AlphaGrid::default_grid().all();
    for (int trial = 0; trial < 200; trial++) {
        ProbVec p = sample_simplex(2 + trial % 5, rng);
        ProbVec q = sample_simplex(p.dim(), rng);
        for (size_t i = 1; i < grid.size(); i++) {
            ASSERT_LE(renyi_entropy(p, grid[i]), renyi_entropy(p, grid[i - 1]) + 1e-10);
            ASSERT_GE(renyi_divergence(p, q, grid[i]), renyi_divergence(p, q, grid[i - 1]) - 1e-10);
        }
    }
}

TEST(thermal_context, construction) {
    auto deg = ThermalContext::degenerate(3);
    ASSERT_TRUE(deg.is_degenerate());
    ASSERT_EQ(deg.gibbs(), ProbVec::uniform(3));
    ASSERT_NEAR(deg.log_z(), std::log(3.0), 1e-15);
    ASSERT_TRUE(deg.has_exact_rational_form());

    auto ctx = ThermalContext::from_energies({0.0, 1.0, 2.0}, 1.0);
    double z = 1 + std::exp(-1.0) + std::exp(-2.0);
    ASSERT_NEAR(ctx.log_z(), std::log(z), 1e-15);
    ASSERT_NEAR(ctx.gibbs()[2], std::exp(-2.0) / z, 1e-15);
    ASSERT_FALSE(ctx.rational_form().has_value());

    auto shifted = ThermalContext::from_energies({5.0, 6.0, 7.0}, 1.0);
    ASSERT_NEAR(shifted.log_z(), std::log(z) - 5, 1e-12);

    auto r = ThermalContext::from_rational_gibbs({2, 1});
    ASSERT_NEAR(r.gibbs()[0], 2.0 / 3.0, 1e-15);
    ASSERT_NEAR(r.log_z(), 0, 0);
    ASSERT_TRUE(r.has_exact_rational_form());

    ASSERT_THROW(ThermalContext::from_energies({0.0}, -1.0), std::invalid_argument);
    ASSERT_THROW(ThermalContext::from_energies({}, 1.0), std::invalid_argument);
}

TEST(thermal_context, tensor) {
    auto a = ThermalContext::from_energies({0.0, 1.0}, 2.0);
    auto b = ThermalContext::degenerate(3);
    auto ab = tensor(a, b);
    ASSERT_EQ(ab.dim(), 6);
    ASSERT_EQ(ab.beta(), 2.0);
    ASSERT_NEAR(ab.log_z(), a.log_z() + b.log_z(), 1e-15);
    ASSERT_NEAR(ab.gibbs()[4], a.gibbs()[1] / 3, 1e-15);
    ASSERT_THROW(tensor(a, ThermalContext::from_energies({0.0, 1.0}, 1.0)), std::invalid_argument);

    auto rr = tensor(ThermalContext::from_rational_gibbs({2, 1}), ThermalContext::from_rational_gibbs({1, 3}));
    ASSERT_EQ(rr.rational_form()->denominator, 12u);
    ASSERT_EQ(rr.rational_form()->numerators, (std::vector<uint64_t>{2, 6, 1, 3}));
    ASSERT_EQ(tensor_power(ThermalContext::degenerate(2), 3).gibbs(), ProbVec::uniform(8));
}

TEST(alpha_grid, shape) {
    auto g = AlphaGrid::default_grid();
    ASSERT_EQ(g.values.front(), 0);
    ASSERT_TRUE(std::find(g.values.begin(), g.values.end(), 1.0) != g.values.end());
    ASSERT_TRUE(std::is_sorted(g.values.begin(), g.values.end()));
    ASSERT_EQ(g.values.size(), 122u);
    ASSERT_NEAR(g.values[1], 1e-3, 1e-18);
    ASSERT_NEAR(g.values.back(), 1e3, 1e-10);
    ASSERT_TRUE(std::isinf(g.all().back()));

    auto custom = AlphaGrid::from_values({2.0, 0.5, 2.0}, false);
    ASSERT_EQ(custom.values, (std::vector<double>{0.0, 0.5, 1.0, 2.0}));
    ASSERT_EQ(custom.all().size(), 4u);
    ASSERT_THROW(AlphaGrid::from_values({-1.0}, true), std::invalid_argument);
}

TEST(free_energy, anchors) {
    auto ctx = ThermalContext::from_energies({0.0, 0.4, 1.1}, 1.7);
    for (double a : {0.0, 0.5, 1.0, 4.0, kInfinity}) {
        ASSERT_NEAR(free_energy(ctx.gibbs(), ctx, a), -ctx.log_z() / ctx.beta(), 1e-12);
    }
    auto deg = ThermalContext::degenerate(4);
    ASSERT_NEAR(free_energy(ProbVec::point_mass(4, 0), deg, 1), std::log(4.0) - deg.log_z(), 1e-14);

    // Differences only see the divergences.
    ProbVec p({0.5, 0.3, 0.2});
    ProbVec q({0.2, 0.3, 0.5});
    double diff = free_energy(p, ctx, 2) - free_energy(q, ctx, 2);
    double expected = std::log(2.0) * (renyi_divergence(p, ctx.gibbs(), 2) - renyi_divergence(q, ctx.gibbs(), 2)) / 1.7;
    ASSERT_NEAR(diff, expected, 1e-14);

    auto uniform = ThermalContext::degenerate(3);
    for (double a : AlphaGrid::default_grid().all()) {
        ASSERT_GE(free_energy(kP, uniform, a), free_energy(kQ, uniform, a) - 1e-12) << a;
    }
}

TEST(embed, examples) {
    std::vector<uint64_t> ones{1, 1, 1};
    ASSERT_EQ(embed(kP, ones), kP);
    std::vector<uint64_t> d{2, 1};
    ProbVec g = ThermalContext::from_rational_gibbs({2, 1}).gibbs();
    ProbVec eg = embed(g, d);
    for (size_t i = 0; i < 3; i++) {
        ASSERT_NEAR(eg[i], 1.0 / 3.0, 1e-15);
    }
    ASSERT_EQ(embed(ProbVec::uniform(2), d), ProbVec({0.25, 0.25, 0.5}));
    std::vector<uint64_t> bad{1, 0};
    ASSERT_THROW(embed(ProbVec::uniform(2), bad), std::invalid_argument);
    ASSERT_THROW(embed(ProbVec::uniform(3), d), std::invalid_argument);
}

TEST(embed, entropy_identity) {
    auto rng = make_engine(Seed{22, 0});
    auto grid = AlphaGrid::default_grid().all();
    for (int trial = 0; trial < 50; trial++) {
        size_t dim = 2 + trial % 3;
        std::vector<uint64_t> d(dim);
        for (auto &x : d) {
            x = 1 + rng() % 6;
        }
        auto ctx = ThermalContext::from_rational_gibbs(d);
        const auto &rf = *ctx.rational_form();
        ProbVec p = sample_simplex(dim, rng);
        ProbVec e = embed(p, rf.numerators);
        for (double a : grid) {
            double lhs = renyi_entropy(e, a);
            double rhs = std::log2((double)rf.denominator) - renyi_divergence(p, ctx.gibbs(), a);
            ASSERT_NEAR(lhs, rhs, 1e-9) << "alpha=" << a;
        }
    }
}

TEST(rationalize, examples) {
    auto u = rationalize_gibbs(ThermalContext::degenerate(3), 3);
    ASSERT_EQ(u.rational_form()->numerators, (std::vector<uint64_t>{1, 1, 1}));
    ASSERT_TRUE(u.rational_form()->exact);

    auto two_thirds = rationalize_gibbs(ThermalContext::from_energies({0.0, std::log(2.0)}, 1.0), 3);
    ASSERT_EQ(two_thirds.rational_form()->denominator, 3u);
    ASSERT_EQ(two_thirds.rational_form()->numerators, (std::vector<uint64_t>{2, 1}));

    ASSERT_THROW(rationalize_gibbs(ThermalContext::degenerate(3), 2), std::invalid_argument);
}

TEST(rationalize, matches_exhaustive_search) {
    auto ctx = ThermalContext::from_energies({0.0, 1.0}, 1.0);
    double g0 = ctx.gibbs()[0];
    double g1 = ctx.gibbs()[1];
    // Oracle: every split of every denominator.
    double best_err = 2;
    uint64_t best_den = 0;
    uint64_t best_num = 0;
    for (uint64_t den = 2; den <= 100; den++) {
        for (uint64_t a = 1; a < den; a++) {
            double err = std::max(std::abs((double)a / den - g0), std::abs((double)(den - a) / den - g1));
            if (err < best_err) {
                best_err = err;
                best_den = den;
                best_num = a;
            }
        }
    }
    ASSERT_EQ(best_den, 93u);
    ASSERT_EQ(best_num, 68u);

    auto r = rationalize_gibbs(ctx, 100);
    ASSERT_EQ(r.rational_form()->denominator, best_den);
    ASSERT_EQ(r.rational_form()->numerators, (std::vector<uint64_t>{best_num, best_den - best_num}));
    ASSERT_FALSE(r.rational_form()->exact);
}

TEST(rationalize, error_bound_and_sum) {
    auto rng = make_engine(Seed{23, 0});
    for (int trial = 0; trial < 40; trial++) {
        size_t dim = 2 + trial % 4;
        std::vector<double> energies(dim);
        for (auto &e : energies) {
            e = 3 * uniform_open01(rng);
        }
        auto ctx = ThermalContext::from_energies(energies, 1.0);
        uint64_t cap = dim + rng() % 200;
        auto r = rationalize_gibbs(ctx, cap);
        const auto &rf = *r.rational_form();
        uint64_t total = 0;
        for (size_t i = 0; i < dim; i++) {
            ASSERT_GE(rf.numerators[i], 1u);
            total += rf.numerators[i];
            ASSERT_LE(std::abs((double)rf.numerators[i] / rf.denominator - ctx.gibbs()[i]), (double)dim / rf.denominator);
        }
        ASSERT_EQ(total, rf.denominator);
        ASSERT_LE(rf.denominator, cap);
    }
}
