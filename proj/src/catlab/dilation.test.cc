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


#include "catlab/dilation.h"

#include <algorithm>
#include <numeric>

#include "catlab/entropy.h"
#include "gtest/gtest.h"

using namespace catlab;

namespace {

std::vector<mpq_class> rationals(std::vector<std::pair<long, long>> fracs) {
    std::vector<mpq_class> out;
    for (auto [n, d] : fracs) {
        mpq_class x(n, d);
        x.canonicalize();
        out.push_back(x);
    }
    return out;
}

// Random Gibbs-preserving channel: coarse-grain a random permutation of an equally weighted shell
// with block sizes a_i, so g_i = a_i / sum(a).
RationalChannel random_channel(size_t d, std::mt19937_64 &rng) {
    std::vector<unsigned long> a(d);
    unsigned long total = 0;
    for (auto &x : a) {
        x = 1 + rng() % 4;
        total += x;
    }
    std::vector<size_t> owner;
    for (size_t i = 0; i < d; i++) {
        owner.insert(owner.end(), a[i], i);
    }
    std::vector<size_t> perm(total);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    RationalChannel ch;
    ch.rows.assign(d, std::vector<mpq_class>(d, mpq_class(0)));
    for (size_t s = 0; s < total; s++) {
        ch.rows[owner[s]][owner[perm[s]]] += mpq_class(1, a[owner[s]]);
    }
    for (size_t i = 0; i < d; i++) {
        mpq_class g(a[i], total);
        g.canonicalize();
        ch.gibbs.push_back(g);
    }
    return ch;
}

std::vector<mpq_class> random_input(size_t d, std::mt19937_64 &rng) {
    std::vector<long> w(d);
    long total = 0;
    for (auto &x : w) {
        x = (long)(rng() % 20);
        total += x;
    }
    if (total == 0) {
        w[0] = total = 1;
    }
    std::vector<std::pair<long, long>> f;
    for (long x : w) {
        f.emplace_back(x, total);
    }
    return rationals(f);
}

std::vector<mpq_class> matrix_oracle(const RationalChannel &ch, const std::vector<mpq_class> &p) {
    std::vector<mpq_class> out;
    for (size_t j = 0; j < p.size(); j++) {
        mpq_class s = 0;
        for (size_t i = 0; i < p.size(); i++) {
            s += ch.rows[i][j] * p[i];
        }
        out.push_back(s);
    }
    return out;
}

ProbVec to_probvec(const std::vector<mpq_class> &x) {
    std::vector<double> v;
    for (const auto &e : x) {
        v.push_back(e.get_d());
    }
    return ProbVec(std::move(v));
}

}  // namespace

TEST(build_dilation, identity) {
    auto g = rationals({{1, 2}, {1, 3}, {1, 6}});
    auto ch = RationalChannel::identity(g);
    auto dil = build_dilation(ch);
    EXPECT_EQ(dil.shell_size, 6u);
    for (uint64_t s = 0; s < dil.shell_size; s++) {
        EXPECT_EQ(dil.assignment[s], s);
    }
    auto p = rationals({{1, 5}, {3, 5}, {1, 5}});
    EXPECT_EQ(apply_dilation_exact(dil, p), p);
}

TEST(build_dilation, full_thermalization) {
    auto g = rationals({{1, 3}, {1, 3}, {1, 3}});
    auto dil = build_dilation(RationalChannel::thermalization(g));
    EXPECT_EQ(dil.shell_size, 9u);
    for (const auto &row : dil.counts) {
        for (uint64_t n : row) {
            EXPECT_EQ(n, 1u);
        }
    }
    auto rng = make_engine(Seed{81, 0});
    for (int i = 0; i < 10; i++) {
        EXPECT_EQ(apply_dilation_exact(dil, random_input(3, rng)), g);
    }
}

TEST(build_dilation, partial_swap) {
    auto g = rationals({{1, 2}, {1, 2}});
    for (long den : {2, 3, 7, 12}) {
        mpq_class t(1, den);
        RationalChannel ch{{{1 - t, t}, {t, 1 - t}}, g};
        EXPECT_EQ(build_dilation(ch).shell_size, (uint64_t)(2 * den));
    }
}

TEST(build_dilation, refuses_invalid_channels) {
    auto g = rationals({{2, 3}, {1, 3}});
    // Doubly stochastic but not Gibbs-preserving for a nonuniform g.
    RationalChannel swap{{rationals({{0, 1}, {1, 1}}), rationals({{1, 1}, {0, 1}})}, g};
    EXPECT_TRUE(swap.stochastic());
    EXPECT_FALSE(swap.gibbs_preserving());
    EXPECT_THROW(build_dilation(swap), DomainError);
    RationalChannel leaky{{rationals({{1, 2}, {1, 3}}), rationals({{0, 1}, {1, 1}})}, g};
    EXPECT_THROW(build_dilation(leaky), DomainError);
}

TEST(build_dilation, random_channels_match_matrix_oracle) {
    auto rng = make_engine(Seed{82, 0});
    for (int trial = 0; trial < 200; trial++) {
        size_t d = 2 + (size_t)trial % 3;
        auto ch = random_channel(d, rng);
        ASSERT_TRUE(ch.gibbs_preserving());
        auto dil = build_dilation(ch);
        auto p = random_input(d, rng);
        EXPECT_EQ(apply_dilation_exact(dil, p), matrix_oracle(ch, p)) << "trial " << trial;
        auto v = verify_dilation(ch, dil, p);
        EXPECT_TRUE(v.counts_ok && v.bijection_ok && v.output_ok && v.round_trip_ok) << "trial " << trial;
    }
}

TEST(dilation_errors, shell_dominates_system) {
    auto rng = make_engine(Seed{83, 0});
    for (int trial = 0; trial < 200; trial++) {
        size_t d = 2 + (size_t)trial % 3;
        auto ch = random_channel(d, rng);
        auto dil = build_dilation(ch);
        auto err = dilation_errors(dil, random_input(d, rng), random_input(d, rng));
        EXPECT_GE(err.shell, err.system);
    }
}

TEST(dilation_errors, equal_when_output_is_flat_in_blocks) {
    auto rng = make_engine(Seed{84, 0});
    for (int trial = 0; trial < 50; trial++) {
        size_t d = 2 + (size_t)trial % 3;
        auto ch = random_channel(d, rng);
        auto q = random_input(d, rng);
        auto id = build_dilation(RationalChannel::identity(ch.gibbs));
        auto e1 = dilation_errors(id, random_input(d, rng), q);
        EXPECT_EQ(e1.shell, e1.system);
        auto e2 = dilation_errors(build_dilation(ch), ch.gibbs, q);
        EXPECT_EQ(e2.shell, e2.system);
    }
}

TEST(dilation_errors, thermalization_counterexample) {
    // Output (1/2, 1/2) matches the target on the system but not slot by slot.
    auto g = rationals({{1, 2}, {1, 2}});
    auto dil = build_dilation(RationalChannel::thermalization(g));
    auto err = dilation_errors(dil, rationals({{1, 1}, {0, 1}}), g);
    EXPECT_EQ(err.system, 0);
    EXPECT_EQ(err.shell, mpq_class(1, 2));
}

TEST(apply_dilation, float_interface) {
    auto g = rationals({{1, 3}, {1, 3}, {1, 3}});
    auto dil = build_dilation(RationalChannel::thermalization(g));
    auto out = apply_dilation(dil, ProbVec({0.7, 0.2, 0.1}));
    for (size_t i = 0; i < 3; i++) {
        EXPECT_EQ(out[i], 1.0 / 3.0);
    }
    EXPECT_THROW(apply_dilation(dil, ProbVec({0.5, 0.5})), std::invalid_argument);
}

TEST(data_processing, relative_entropy_contracts) {
    auto rng = make_engine(Seed{85, 0});
    for (int trial = 0; trial < 300; trial++) {
        size_t d = 2 + (size_t)trial % 3;
        auto ch = random_channel(d, rng);
        auto g = to_probvec(ch.gibbs);
        auto p = random_input(d, rng);
        auto out = to_probvec(ch.apply(p));
        auto in = to_probvec(p);
        for (double alpha : {0.5, 1.0, 2.0, kInfinity}) {
            EXPECT_LE(renyi_divergence(out, g, alpha), renyi_divergence(in, g, alpha) + 1e-12)
                << "trial " << trial << " alpha " << alpha;
        }
    }
}
