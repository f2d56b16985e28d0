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


// Acceptance suite: one PASS/FAIL line per criterion. `--only <name>` runs a single criterion.
// Exit status is 0 only when every selected criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "catlab/catalysis.h"
#include "catlab/convex_split.h"
#include "catlab/dilation.h"
#include "catlab/experiments.h"
#include "catlab/majorization.h"
#include "oracles.h"

using namespace catlab;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

const ProbVec kP({0.65, 0.2, 0.15});
const ProbVec kQ({0.5, 0.4, 0.1});

Outcome anchor() {
    auto grid = AlphaGrid::default_grid();
    auto ctx = ThermalContext::degenerate(3);
    bool pq = majorizes(kP, kQ);
    bool qp = majorizes(kQ, kP);
    auto laws = second_laws(kP, kQ, ctx, grid);
    bool pass = !pq && !qp && laws.holds && laws.margin > 0;
    return {pass, fmt("p>q=%d q>p=%d second_laws=%d margin=%.3g (required > 0, worst alpha %.3g) interior_margin=%.3g",
                      pq, qp, laws.holds, laws.margin, laws.worst_alpha, laws.interior_margin)};
}

Outcome convex_split() {
    constexpr double kTol = 1e-12;
    auto rng = make_engine(Seed{2026, 101});
    size_t checks = 0, violations = 0;
    double worst_ratio = 0;
    for (int trial = 0; trial < 1000; trial++) {
        size_t d = 2 + trial % 2;
        size_t m_max = d == 2 ? 14 : 9;
        ProbVec rho = sample_simplex(d, rng);
        ProbVec sigma = sample_simplex(d, rng);
        for (size_t m = 1; m <= m_max; m++) {
            auto r = verify_convex_split(rho, sigma, m);
            checks++;
            violations += r.empirical > r.bound + kTol;
            worst_ratio = std::max(worst_ratio, r.ratio());
        }
    }
    return {violations == 0, fmt("1000 pairs, %zu (pair, m) checks, %zu above bound + %.0e, max empirical/bound %.4f",
                                 checks, violations, kTol, worst_ratio)};
}

Outcome theorem3_chain() {
    // Under a uniform Gibbs state at d=3 no activated pair has a finite copy number, so the chain
    // is exercised with the non-degenerate rational Gibbs state (3, 2, 1)/6.
    auto ctx = ThermalContext::from_rational_gibbs({3, 2, 1});
    auto grid = AlphaGrid::default_grid();
    auto rng = make_engine(Seed{2026, 103});
    size_t found = 0, drawn = 0, failures = 0;
    std::vector<size_t> by_k(7, 0);
    while (found < 200 && drawn < 200000) {
        drawn++;
        ProbVec p = sample_simplex(3, rng);
        ProbVec q = sample_simplex(3, rng);
        if (classify_target(p, q, ctx, grid).cls != TargetClass::catalytic_only) {
            continue;
        }
        auto k = min_k_copy(p, q, ctx, 6, Arithmetic::exact);
        if (!k) {
            continue;
        }
        found++;
        by_k[*k]++;
        auto r = duan_catalysis_check(p, q, *k, ctx, Arithmetic::exact);
        failures += !(r.kcopy_ok && r.catalytic_ok);
    }
    std::ostringstream ks;
    for (size_t k = 2; k <= 6; k++) {
        ks << (k > 2 ? "," : "") << "k" << k << ":" << by_k[k];
    }
    return {found == 200 && failures == 0,
            fmt("g=(3,2,1)/6, %zu activated pairs with min_k<=6 (%s) from %zu draws, %zu exact Duan failures", found,
                ks.str().c_str(), drawn, failures)};
}

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

Outcome dilation() {
    auto rng = make_engine(Seed{2026, 104});
    size_t mismatches = 0, round_trip = 0;
    for (int trial = 0; trial < 200; trial++) {
        size_t d = 1 + (size_t)trial % 4;
        auto ch = random_channel(d, rng);
        auto dil = build_dilation(ch);
        std::vector<mpq_class> p(d);
        mpq_class total = 0;
        for (auto &x : p) {
            x = mpq_class(rng() % 50);
            total += x;
        }
        if (total == 0) {
            p[0] = total = 1;
        }
        for (auto &x : p) {
            x /= total;
        }
        std::vector<mpq_class> matrix(d, mpq_class(0));
        for (size_t i = 0; i < d; i++) {
            for (size_t j = 0; j < d; j++) {
                matrix[j] += p[i] * ch.rows[i][j];
            }
        }
        mismatches += apply_dilation_exact(dil, p) != matrix;
        auto shell = shell_embed(dil, p);
        round_trip += invert_shell(dil, permute_shell(dil, shell)) != shell;
    }
    return {mismatches == 0 && round_trip == 0,
            fmt("200 channels d<=4, %zu marginal mismatches, %zu round-trip failures (exact rationals)", mismatches,
                round_trip)};
}

Outcome approx_oracle() {
    auto rng = make_engine(Seed{2026, 105});
    auto deg = ThermalContext::degenerate(3);
    auto draw = [&]() {
        std::vector<int64_t> v(3);
        v[0] = (int64_t)(rng() % 101);
        v[1] = (int64_t)(rng() % (uint64_t)(101 - v[0]));
        v[2] = 100 - v[0] - v[1];
        return v;
    };
    auto as_prob = [](const std::vector<int64_t> &v) {
        return ProbVec({(double)v[0] / 100, (double)v[1] / 100, (double)v[2] / 100});
    };
    size_t instances = 0, rejected = 0, unsound = 0, gaps = 0, positives = 0;
    while (instances < 500) {
        auto p = draw();
        auto q = draw();
        auto c = draw();
        int64_t e = (int64_t)(rng() % 31);
        ProbVec flat = flattest_state(as_prob(c), (double)e / 100);
        bool on_lattice = true;
        for (double x : flat.entries()) {
            on_lattice &= std::abs(x * 100 - std::round(x * 100)) < 1e-9;
        }
        if (!on_lattice) {
            rejected++;
            continue;
        }
        instances++;
        bool heuristic = eps_catalytic_step(as_prob(p), as_prob(q), as_prob(c), (double)e / 100, deg);
        bool oracle_says = oracle::lattice_ball_search(p, q, c, e).any;
        positives += heuristic;
        unsound += heuristic && !oracle_says;
        gaps += oracle_says && !heuristic;
    }
    return {unsound == 0, fmt("500 lattice instances (%zu off-lattice redrawn), heuristic true %zu, "
                              "heuristic true/oracle false %zu, oracle-only %zu",
                              rejected, positives, unsound, gaps)};
}

std::vector<double> column(const Table &t, const std::string &name, const std::string &key_col,
                           const std::string &key) {
    std::vector<double> out;
    for (size_t r = 0; r < t.rows.size(); r++) {
        if (key_col.empty() || t.at(r, key_col) == key) {
            out.push_back(t.number(r, name));
        }
    }
    return out;
}

Outcome fig2_trend() {
    auto cfg = preset("fig2");
    cfg.seed = 2026;
    cfg.n_c = 500;
    auto result = run_experiment(cfg);
    const Table &t = result.tables.at("fig2.csv");
    bool pass = true;
    std::ostringstream detail;
    detail << "mu=" << cfg.settings[0].mu << " N_C=" << cfg.n_c;
    for (const auto &s : cfg.samplers) {
        auto p = column(t, "p_succ", "distribution", s.name());
        auto ci = column(t, "ci95", "distribution", s.name());
        size_t drops = 0;
        for (size_t i = 1; i < p.size(); i++) {
            drops += p[i] < p[i - 1] - 2 * std::max(ci[i], ci[i - 1]);
        }
        pass = pass && drops == 0;
        detail << fmt("; %s %.3f->%.3f, %zu drops beyond 2*ci95", s.name().c_str(), p.front(), p.back(), drops);
        if (s.kind == Sampler::Kind::exponential) {
            bool rise = p.back() - p.front() > 0.1;
            pass = pass && rise;
            detail << fmt(" (rise %.3f, required > 0.1)", p.back() - p.front());
        }
    }
    return {pass, detail.str()};
}

Outcome fig45_trend() {
    auto cfg = preset("fig4");
    cfg.seed = 2026;
    cfg.n_s = 500;
    cfg.n_c = 200;
    cfg.targets = "sample";
    auto result = run_experiment(cfg);
    const Table &t = result.tables.at("fig4_summary.csv");
    auto d_c = column(t, "d_C", "", "");
    auto frac = column(t, "fraction_above_gamma", "", "");
    auto in_d = column(t, "in_D", "", "");
    double first = 0, last = 0;
    std::ostringstream detail;
    detail << "mu=" << cfg.settings[0].mu << " gamma=" << cfg.settings[0].gamma << " N_S=500 N_C=200; fraction";
    for (size_t i = 0; i < d_c.size(); i++) {
        detail << fmt(" d_C=%g:%.3f(of %g)", d_c[i], frac[i], in_d[i]);
        if (d_c[i] == 16) {
            first = frac[i];
        }
        if (d_c[i] == 256) {
            last = frac[i];
        }
    }
    return {last > first, detail.str() + "; required d_C=256 > d_C=16"};
}

bool rel_close(double got, double want, double tol) {
    return std::abs(got - want) <= tol * std::abs(want);
}

Outcome closed_form() {
    constexpr double kTol = 1e-12;
    // Independent re-evaluation of (d_S - 1) / (1 + (d_S - 1) log2 d_C).
    double e22 = 1.0 / (1.0 + 1.0 * 1.0);
    double e3 = 2.0 / (1.0 + 2.0 * 8.0);
    bool a = rel_close(embezzlement_bound(2, 2), 0.5, kTol) && rel_close(0.5, e22, kTol);
    bool b = rel_close(embezzlement_bound(3, 256), 2.0 / 17.0, kTol) && rel_close(2.0 / 17.0, e3, kTol);
    ProbVec s({0.7, 0.2, 0.1});
    auto deg = ThermalContext::degenerate(3);
    auto conv = conversion_rate({0.5, 100, s, s, deg, deg});
    bool c = rel_close(conv.r_n, 1.0, kTol);
    bool d = rel_close(conv.delta_bound, std::exp(-std::pow(100.0, 0.5)), kTol) &&
             rel_close(conv.delta_bound, std::exp(-10.0), kTol);
    return {a && b && c && d, fmt("eps_bnd(2,2)=%.17g eps_bnd(3,256)=%.17g r_n(same)=%.17g delta(100,0.5)=%.17g, "
                                  "relative tolerance %.0e",
                                  embezzlement_bound(2, 2), embezzlement_bound(3, 256), conv.r_n, conv.delta_bound,
                                  kTol)};
}

std::string render(const ExperimentResult &r) {
    std::string out;
    for (const auto &[name, table] : r.tables) {
        out += name + "\n" + table.csv();
    }
    return out;
}

Outcome determinism() {
    // Every sampled experiment, run twice with the same seed on 1 and on 4 worker threads.
    std::vector<std::string> names = preset_names();
    size_t identical = 0;
    std::ostringstream detail;
    const char *prior = std::getenv("CATLAB_THREADS");
    std::string saved = prior ? prior : "";
    for (const auto &name : names) {
        auto cfg = preset(name);
        cfg.seed = 2026;
        cfg.n_c = std::min<size_t>(cfg.n_c, 40);
        cfg.n_s = std::min<size_t>(cfg.n_s, 60);
        cfg.n_pairs = std::min<size_t>(cfg.n_pairs, 300);
        cfg.n_inputs = std::min<size_t>(cfg.n_inputs, 6);
        setenv("CATLAB_THREADS", "1", 1);
        auto a = render(run_experiment(cfg));
        setenv("CATLAB_THREADS", "4", 1);
        auto b = render(run_experiment(cfg));
        bool same = a == b;
        identical += same;
        detail << (name == names.front() ? "" : ", ") << name << (same ? " identical" : " DIFFERS");
    }
    if (prior) {
        setenv("CATLAB_THREADS", saved.c_str(), 1);
    } else {
        unsetenv("CATLAB_THREADS");
    }
    return {identical == names.size(),
            detail.str() + fmt(" (%zu/%zu presets, reduced scale, 1 vs 4 threads)", identical, names.size())};
}

struct Criterion {
    const char *name;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char **argv) {
    std::vector<Criterion> all = {
        {"anchor", anchor},
        {"convex_split", convex_split},
        {"theorem3_chain", theorem3_chain},
        {"dilation", dilation},
        {"approx_oracle", approx_oracle},
        {"fig2_trend", fig2_trend},
        {"fig45_trend", fig45_trend},
        {"closed_form", closed_form},
        {"determinism", determinism},
    };
    std::string only;
    for (int i = 1; i < argc; i++) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            only = argv[++i];
        } else {
            std::cerr << "usage: " << argv[0] << " [--only <criterion>]\n";
            return 2;
        }
    }
    bool matched = false, all_pass = true;
    for (const auto &c : all) {
        if (!only.empty() && only != c.name) {
            continue;
        }
        matched = true;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << " [" << fmt("%.1fs", secs) << "] " << o.detail
                  << std::endl;
        all_pass = all_pass && o.pass;
    }
    if (!matched) {
        std::cerr << "unknown criterion: " << only << "\n";
        return 2;
    }
    return all_pass ? 0 : 1;
}
