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


#include "experiments.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "catalysis.h"
#include "majorization.h"
#include "parallel.h"

namespace catlab {

namespace {

// Fixed stream ids, so that adding a sweep dimension never reshuffles another one's draws.
constexpr uint64_t kCatalystStream = 1;
constexpr uint64_t kTargetStream = 2;
constexpr uint64_t kInputStream = 3;
constexpr uint64_t kPairStream = 4;

uint64_t sampler_salt(const Sampler &s, uint64_t d_c) {
    return ((uint64_t)s.kind << 48) ^ d_c;
}

std::vector<std::string> indexed_columns(const std::string &prefix, size_t d) {
    std::vector<std::string> out;
    for (size_t i = 1; i <= d; i++) {
        out.push_back(prefix + std::to_string(i));
    }
    return out;
}

void append_entries(std::vector<std::string> &row, const ProbVec &v) {
    for (double x : v.entries()) {
        row.push_back(format_number(x));
    }
}

std::vector<double> concat(const ProbVec &a, const ProbVec &b) {
    std::vector<double> out(a.entries().begin(), a.entries().end());
    out.insert(out.end(), b.entries().begin(), b.entries().end());
    return out;
}

std::vector<double> to_vector(const ProbVec &a) {
    return std::vector<double>(a.entries().begin(), a.entries().end());
}

Table trials_table() {
    return Table{{"experiment", "key", "trial", "inputs_digest", "outcome"}, {}};
}

Table cdf_table(std::vector<std::string> key_columns) {
    key_columns.push_back("threshold");
    key_columns.push_back("cdf");
    key_columns.push_back("n_points");
    return Table{key_columns, {}};
}

// Share of values at or below each threshold 0, 0.01, ..., 1.
void add_cdf_rows(Table &t, const std::vector<std::string> &key, std::vector<double> values) {
    std::sort(values.begin(), values.end());
    for (int k = 0; k <= 100; k++) {
        double thr = k / 100.0;
        size_t below = (size_t)(std::upper_bound(values.begin(), values.end(), thr) - values.begin());
        std::vector<std::string> row = key;
        row.push_back(format_number(thr));
        row.push_back(values.empty() ? "" : format_number((double)below / (double)values.size()));
        row.push_back(std::to_string(values.size()));
        t.add(std::move(row));
    }
}

FEstimate f_from_classes(
    const ProbVec &p,
    const std::vector<ProbVec> &targets,
    const std::vector<Classification> &classes,
    const ThermalContext &ctx,
    const std::vector<ProbVec> &catalysts,
    double eps,
    double gamma) {
    FEstimate out;
    out.sampled = targets.size();
    for (size_t j = 0; j < targets.size(); j++) {
        out.grid_sensitive += classes[j].grid_sensitive;
        switch (classes[j].cls) {
            case TargetClass::thermal:
                out.in_s++;
                break;
            case TargetClass::catalytic_only: {
                out.in_d++;
                PsuccEstimate est = estimate_psucc(p, targets[j], ctx, catalysts, eps);
                out.cap_breaches += est.cap_breaches;
                if (est.estimate.trials > 0 && est.estimate.mean >= gamma) {
                    out.above++;
                }
                break;
            }
            case TargetClass::unreachable:
                break;
        }
    }
    out.in_t = out.in_s + out.in_d;
    if (out.in_d > 0) {
        out.f = (double)out.above / (double)out.in_d;
    }
    return out;
}

std::vector<Classification> classify_all(
    const ProbVec &p, const std::vector<ProbVec> &targets, const ThermalContext &ctx, const AlphaGrid &grid) {
    std::vector<Classification> out;
    out.reserve(targets.size());
    for (const auto &q : targets) {
        out.push_back(classify_target(p, q, ctx, grid));
    }
    return out;
}

struct CatalystSource {
    Sampler sampler;
    uint64_t d_c;
};

std::vector<CatalystSource> random_sources(const ExperimentConfig &cfg) {
    std::vector<CatalystSource> out;
    for (const auto &s : cfg.samplers) {
        for (uint64_t d : cfg.d_c) {
            out.push_back({s, s.dim(d)});
        }
    }
    return out;
}

std::vector<ProbVec> catalyst_bank(const ExperimentConfig &cfg, const CatalystSource &src) {
    return sample_catalysts(
        src.sampler, src.d_c, cfg.n_c, Seed{cfg.seed, kCatalystStream}.child(sampler_salt(src.sampler, src.d_c)));
}

std::string psucc_key(const MuGamma &s, const CatalystSource &src) {
    return src.sampler.name() + "/" + std::to_string(src.d_c) + "/" + format_number(s.mu);
}

ExperimentResult run_fig2(const ExperimentConfig &cfg) {
    ThermalContext ctx = cfg.context();
    auto sources = random_sources(cfg);
    size_t rows = sources.size() * cfg.settings.size();
    std::vector<PsuccEstimate> est(rows);
    std::vector<std::vector<ProbVec>> banks(sources.size());
    parallel_for(sources.size(), [&](size_t i) { banks[i] = catalyst_bank(cfg, sources[i]); });
    parallel_for(rows, [&](size_t r) {
        const auto &src = sources[r % sources.size()];
        const auto &setting = cfg.settings[r / sources.size()];
        double eps = catalyst_error(cfg.d_s, src.d_c, setting.mu);
        est[r] = estimate_psucc(*cfg.p, *cfg.q, ctx, banks[r % sources.size()], eps);
    });

    ExperimentResult res;
    Table main{
        {"distribution", "d_C", "p_succ", "ci95", "n_trials", "seed", "mu", "eps_c", "successes", "cap_breaches"}, {}};
    Table trials = trials_table();
    for (size_t r = 0; r < rows; r++) {
        const auto &src = sources[r % sources.size()];
        const auto &setting = cfg.settings[r / sources.size()];
        const auto &e = est[r];
        main.add({
            src.sampler.name(),
            std::to_string(src.d_c),
            format_number(e.estimate.mean),
            format_number(e.estimate.ci95),
            std::to_string(e.estimate.trials),
            std::to_string(cfg.seed),
            format_number(setting.mu),
            format_number(catalyst_error(cfg.d_s, src.d_c, setting.mu)),
            std::to_string(e.estimate.successes),
            std::to_string(e.cap_breaches),
        });
        res.cap_breaches += e.cap_breaches;
        const auto &bank = banks[r % sources.size()];
        for (size_t t = 0; t < e.outcomes.size(); t++) {
            trials.add({"fig2", psucc_key(setting, src), std::to_string(t), digest_hex(to_vector(bank[t])),
                        e.outcomes[t] ? "1" : "0"});
        }
    }
    res.tables["fig2.csv"] = std::move(main);
    res.tables["trials.csv"] = std::move(trials);
    return res;
}

ExperimentResult run_fig3(const ExperimentConfig &cfg) {
    ThermalContext ctx = cfg.context();
    KCopyCurve curve =
        kcopy_fraction(cfg.d_s, ctx, AlphaGrid::default_grid(), cfg.n_pairs, cfg.k_max, Seed{cfg.seed, kPairStream});
    ExperimentResult res;
    Table main{{"k", "fraction", "ci95", "n_cas", "n_pairs", "seed"}, {}};
    for (const auto &pt : curve.points) {
        main.add({std::to_string(pt.k), format_number(pt.fraction), format_number(pt.ci95),
                  std::to_string(curve.n_activated), std::to_string(cfg.n_pairs), std::to_string(cfg.seed)});
    }
    Table trials = trials_table();
    for (size_t i = 0; i < curve.pairs.size(); i++) {
        const auto &pr = curve.pairs[i];
        std::string outcome = "not_cas";
        if (pr.cap_breach_at) {
            outcome = "cap_at_" + std::to_string(*pr.cap_breach_at);
        } else if (pr.activated) {
            outcome = pr.min_k ? std::to_string(*pr.min_k) : "none";
        }
        trials.add({"fig3", "pairs", std::to_string(i), digest_hex(concat(pr.p, pr.q)), outcome});
    }
    res.cap_breaches = curve.cap_breaches;
    res.tables["fig3.csv"] = std::move(main);
    res.tables["trials.csv"] = std::move(trials);
    return res;
}

Table boundary_table(const ProbVec &p, const ThermalContext &ctx, const AlphaGrid &grid, size_t resolution) {
    auto lattice = grid_targets(3, resolution);
    std::vector<Classification> cls(lattice.size());
    parallel_for(lattice.size(), [&](size_t i) { cls[i] = classify_target(p, lattice[i], ctx, grid); });
    // Index of lattice point (a, b, c) with a + b + c = res, in grid_targets order.
    size_t n = resolution;
    std::vector<std::vector<long>> index(n + 1, std::vector<long>(n + 1, -1));
    for (size_t i = 0; i < lattice.size(); i++) {
        size_t a = (size_t)std::llround(lattice[i][0] * (double)n);
        size_t b = (size_t)std::llround(lattice[i][1] * (double)n);
        index[a][b] = (long)i;
    }
    auto in_set = [&](size_t i, bool catalytic) {
        return cls[i].cls == TargetClass::thermal || (catalytic && cls[i].cls == TargetClass::catalytic_only);
    };
    const int moves[6][2] = {{1, -1}, {-1, 1}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    Table t{{"set", "q1", "q2", "q3"}, {}};
    for (bool catalytic : {false, true}) {
        for (size_t a = 0; a <= n; a++) {
            for (size_t b = 0; a + b <= n; b++) {
                size_t i = (size_t)index[a][b];
                if (!in_set(i, catalytic)) {
                    continue;
                }
                bool edge = a == 0 || b == 0 || a + b == n;
                for (const auto &mv : moves) {
                    long na = (long)a + mv[0], nb = (long)b + mv[1];
                    if (na < 0 || nb < 0 || na + nb > (long)n) {
                        continue;
                    }
                    edge = edge || !in_set((size_t)index[na][nb], catalytic);
                }
                if (edge) {
                    std::vector<std::string> row{catalytic ? "T" : "S"};
                    append_entries(row, lattice[i]);
                    t.add(std::move(row));
                }
            }
        }
    }
    return t;
}

ExperimentResult run_fig4(const ExperimentConfig &cfg) {
    ThermalContext ctx = cfg.context();
    AlphaGrid grid = AlphaGrid::default_grid();
    const ProbVec &p = *cfg.p;
    TargetSpec spec = TargetSpec::parse(cfg.targets, cfg.n_s);
    std::vector<ProbVec> targets = spec.mode == TargetSpec::Mode::sample
                                       ? sample_targets(cfg.d_s, spec.count, Seed{cfg.seed, kTargetStream})
                                       : grid_targets(cfg.d_s, (uint64_t)std::llround(1 / spec.step));
    std::vector<Classification> cls(targets.size());
    parallel_for(targets.size(), [&](size_t j) { cls[j] = classify_target(p, targets[j], ctx, grid); });

    ExperimentResult res;
    for (const auto &c : cls) {
        res.grid_sensitive += c.grid_sensitive;
    }
    std::vector<std::string> cols{"mu", "gamma", "d_C", "target"};
    auto qcols = indexed_columns("q", cfg.d_s);
    cols.insert(cols.end(), qcols.begin(), qcols.end());
    for (const char *c : {"class", "grid_sensitive", "p_succ", "ci95", "n_trials", "seed"}) {
        cols.push_back(c);
    }
    Table main{cols, {}};
    Table summary{{"mu", "gamma", "d_C", "eps_c", "n_targets", "in_S", "in_D", "unreachable", "above_gamma",
                   "fraction_above_gamma", "mean_p_succ_cas", "cap_breaches"},
                  {}};
    Table cdf = cdf_table({"mu", "gamma", "d_C"});
    Table trials = trials_table();

    for (const auto &src : random_sources(cfg)) {
        auto bank = catalyst_bank(cfg, src);
        for (const auto &setting : cfg.settings) {
            double eps = catalyst_error(cfg.d_s, src.d_c, setting.mu);
            std::vector<std::optional<PsuccEstimate>> est(targets.size());
            parallel_for(targets.size(), [&](size_t j) {
                if (cls[j].cls != TargetClass::unreachable) {
                    est[j] = estimate_psucc(p, targets[j], ctx, bank, eps);
                }
            });
            size_t in_s = 0, in_d = 0, above = 0, breaches = 0;
            double total = 0;
            std::vector<double> cas_values;
            std::vector<std::string> key{format_number(setting.mu), format_number(setting.gamma), std::to_string(src.d_c)};
            for (size_t j = 0; j < targets.size(); j++) {
                std::vector<std::string> row = key;
                row.push_back(std::to_string(j));
                append_entries(row, targets[j]);
                row.push_back(to_string(cls[j].cls));
                row.push_back(cls[j].grid_sensitive ? "1" : "0");
                std::string outcome = to_string(cls[j].cls);
                if (est[j]) {
                    const auto &e = est[j]->estimate;
                    row.push_back(format_number(e.mean));
                    row.push_back(format_number(e.ci95));
                    row.push_back(std::to_string(e.trials));
                    breaches += est[j]->cap_breaches;
                    outcome = format_number(e.mean);
                } else {
                    row.insert(row.end(), {"", "", "0"});
                }
                row.push_back(std::to_string(cfg.seed));
                main.add(std::move(row));
                trials.add({"fig4", key[0] + "/" + key[2], std::to_string(j), digest_hex(to_vector(targets[j])), outcome});

                if (cls[j].cls == TargetClass::thermal) {
                    in_s++;
                } else if (cls[j].cls == TargetClass::catalytic_only) {
                    in_d++;
                    double v = est[j]->estimate.mean;
                    cas_values.push_back(v);
                    total += v;
                    above += est[j]->estimate.trials > 0 && v >= setting.gamma;
                }
            }
            summary.add({
                key[0],
                key[1],
                key[2],
                format_number(eps),
                std::to_string(targets.size()),
                std::to_string(in_s),
                std::to_string(in_d),
                std::to_string(targets.size() - in_s - in_d),
                std::to_string(above),
                in_d ? format_number((double)above / (double)in_d) : "",
                in_d ? format_number(total / (double)in_d) : "",
                std::to_string(breaches),
            });
            add_cdf_rows(cdf, key, cas_values);
            res.cap_breaches += breaches;
        }
    }
    res.tables["fig4.csv"] = std::move(main);
    res.tables["fig4_summary.csv"] = std::move(summary);
    res.tables["fig4_cdf.csv"] = std::move(cdf);
    res.tables["trials.csv"] = std::move(trials);
    if (cfg.d_s == 3) {
        res.tables["fig4_boundary.csv"] = boundary_table(p, ctx, grid, cfg.boundary_resolution);
    }
    return res;
}

// fig5 and fig6 share everything except where the catalysts come from.
ExperimentResult run_f_sweep(
    const ExperimentConfig &cfg, const std::vector<CatalystSource> &sources, bool multicopy_columns) {
    ThermalContext ctx = cfg.context();
    AlphaGrid grid = AlphaGrid::default_grid();
    std::vector<ProbVec> inputs;
    std::vector<std::vector<ProbVec>> targets(cfg.n_inputs);
    std::vector<std::vector<Classification>> cls(cfg.n_inputs);
    for (size_t i = 0; i < cfg.n_inputs; i++) {
        auto rng = make_engine(Seed{cfg.seed, kInputStream}.child(i));
        inputs.push_back(sample_simplex(cfg.d_s, rng));
    }
    parallel_for(cfg.n_inputs, [&](size_t i) {
        targets[i] = sample_targets(cfg.d_s, cfg.n_s, Seed{cfg.seed, kTargetStream}.child(i));
        cls[i] = classify_all(inputs[i], targets[i], ctx, grid);
    });

    std::string name = cfg.experiment;
    std::vector<std::string> key_cols{"mu", "gamma"};
    if (multicopy_columns) {
        key_cols.insert(key_cols.end(), {"r", "n"});
    } else {
        key_cols.push_back("catalyst");
    }
    key_cols.push_back("d_C");
    std::vector<std::string> cols = key_cols;
    cols.push_back("input");
    auto pcols = indexed_columns("p", cfg.d_s);
    cols.insert(cols.end(), pcols.begin(), pcols.end());
    for (const char *c :
         {"f", "f_defined", "sampled", "in_S", "in_T", "in_D", "above", "grid_sensitive", "cap_breaches", "seed"}) {
        cols.push_back(c);
    }
    Table main{cols, {}};
    Table cdf = cdf_table(key_cols);
    Table trials = trials_table();
    ExperimentResult res;

    for (const auto &src : sources) {
        auto bank = catalyst_bank(cfg, src);
        for (const auto &setting : cfg.settings) {
            double eps = catalyst_error(cfg.d_s, src.d_c, setting.mu);
            std::vector<FEstimate> est(cfg.n_inputs);
            parallel_for(cfg.n_inputs, [&](size_t i) {
                est[i] = f_from_classes(inputs[i], targets[i], cls[i], ctx, bank, eps, setting.gamma);
            });
            std::vector<std::string> key{format_number(setting.mu), format_number(setting.gamma)};
            if (multicopy_columns) {
                key.push_back(format_number(src.sampler.r));
                key.push_back(std::to_string(src.sampler.n));
            } else {
                key.push_back(src.sampler.name());
            }
            key.push_back(std::to_string(src.d_c));
            std::string trial_key;
            for (size_t k = 0; k < key.size(); k++) {
                trial_key += (k ? "/" : "") + key[k];
            }
            std::vector<double> defined;
            for (size_t i = 0; i < cfg.n_inputs; i++) {
                const auto &e = est[i];
                std::vector<std::string> row = key;
                row.push_back(std::to_string(i));
                append_entries(row, inputs[i]);
                row.push_back(e.f ? format_number(*e.f) : "");
                row.push_back(e.f ? "1" : "0");
                for (size_t v : {e.sampled, e.in_s, e.in_t, e.in_d, e.above, e.grid_sensitive, e.cap_breaches}) {
                    row.push_back(std::to_string(v));
                }
                row.push_back(std::to_string(cfg.seed));
                main.add(std::move(row));
                trials.add({name, trial_key, std::to_string(i), digest_hex(to_vector(inputs[i])),
                            e.f ? format_number(*e.f) : "undefined"});
                if (e.f) {
                    defined.push_back(*e.f);
                }
                res.cap_breaches += e.cap_breaches;
            }
            add_cdf_rows(cdf, key, defined);
        }
    }
    for (const auto &per_input : cls) {
        for (const auto &c : per_input) {
            res.grid_sensitive += c.grid_sensitive;
        }
    }
    res.tables[name + ".csv"] = std::move(main);
    res.tables[name + "_cdf.csv"] = std::move(cdf);
    res.tables["trials.csv"] = std::move(trials);
    if (cfg.d_s >= 4) {
        res.warnings.push_back(
            "d_S = " + std::to_string(cfg.d_s) + " sweeps are slow at full sample sizes; expect hours on a desktop");
    }
    return res;
}

}  // namespace

std::string to_string(TargetClass c) {
    switch (c) {
        case TargetClass::thermal:
            return "thermal";
        case TargetClass::catalytic_only:
            return "catalytic_only";
        case TargetClass::unreachable:
            return "unreachable";
    }
    return "";
}

Classification classify_target(const ProbVec &p, const ProbVec &q, const ThermalContext &ctx, const AlphaGrid &grid) {
    if (thermo_majorizes(p, q, ctx)) {
        return {TargetClass::thermal, false};
    }
    SecondLaws laws = second_laws(p, q, ctx, grid);
    return {laws.holds ? TargetClass::catalytic_only : TargetClass::unreachable, laws.grid_sensitive};
}

double catalyst_error(uint64_t d_s, uint64_t d_c, double mu) {
    return mu * embezzlement_bound(d_s, d_c);
}

PsuccEstimate estimate_psucc(
    const ProbVec &p,
    const ProbVec &q,
    const ThermalContext &ctx,
    const std::vector<ProbVec> &catalysts,
    double eps) {
    PsuccEstimate out;
    if (thermo_majorizes(p, q, ctx)) {
        out.direct = true;
        out.outcomes.assign(catalysts.size(), true);
        out.estimate = bernoulli_estimate(catalysts.size(), catalysts.size());
        return out;
    }
    size_t successes = 0;
    out.outcomes.reserve(catalysts.size());
    for (const auto &c : catalysts) {
        try {
            bool ok = eps_catalytic_step(p, q, c, eps, ctx);
            successes += ok;
            out.outcomes.push_back(ok);
        } catch (const ResourceLimitError &) {
            out.cap_breaches++;
            out.outcomes.push_back(false);
        }
    }
    out.estimate = bernoulli_estimate(successes, catalysts.size() - out.cap_breaches);
    return out;
}

std::vector<ProbVec> sample_targets(size_t d_s, size_t count, Seed seed) {
    std::vector<ProbVec> out;
    out.reserve(count);
    for (size_t j = 0; j < count; j++) {
        auto rng = make_engine(seed.child(j));
        out.push_back(sample_simplex(d_s, rng));
    }
    return out;
}

std::vector<ProbVec> grid_targets(size_t d_s, uint64_t steps, size_t cap) {
    if (d_s < 1 || steps < 1) {
        throw std::invalid_argument("grid targets need d_s >= 1 and at least one step");
    }
    std::vector<ProbVec> out;
    std::vector<uint64_t> parts(d_s, 0);
    // Enumerate compositions in lexicographic order of the leading parts.
    auto rec = [&](auto &&self, size_t pos, uint64_t left) -> void {
        if (pos + 1 == d_s) {
            parts[pos] = left;
            check_dim_cap(out.size() + 1, cap, "target grid");
            std::vector<double> v;
            for (uint64_t x : parts) {
                v.push_back((double)x / (double)steps);
            }
            out.emplace_back(std::move(v));
            return;
        }
        for (uint64_t x = 0; x <= left; x++) {
            parts[pos] = x;
            self(self, pos + 1, left - x);
        }
    };
    rec(rec, 0, steps);
    return out;
}

FEstimate estimate_f(
    const ProbVec &p,
    const std::vector<ProbVec> &targets,
    const ThermalContext &ctx,
    const AlphaGrid &grid,
    const std::vector<ProbVec> &catalysts,
    double eps,
    double gamma) {
    return f_from_classes(p, targets, classify_all(p, targets, ctx, grid), ctx, catalysts, eps, gamma);
}

std::optional<size_t> min_k_copy_filtered(
    const ProbVec &p, const ProbVec &q, const ThermalContext &ctx, size_t k_max, size_t cap) {
    if (ctx.is_degenerate() && (p.min() > q.min() || p.max() < q.max())) {
        return std::nullopt;
    }
    return min_k_copy(p, q, ctx, k_max, Arithmetic::floating, cap);
}

KCopyCurve kcopy_fraction(
    size_t d_s, const ThermalContext &ctx, const AlphaGrid &grid, size_t n_pairs, size_t k_max, Seed seed, size_t cap) {
    if (ctx.dim() != d_s) {
        throw std::invalid_argument("thermal context dimension differs from d_s");
    }
    KCopyCurve out;
    out.pairs.resize(n_pairs, KCopyPair{ProbVec::uniform(1), ProbVec::uniform(1), false, {}, {}});
    parallel_for(n_pairs, [&](size_t i) {
        auto rng = make_engine(seed.child(i));
        ProbVec p = sample_simplex(d_s, rng);
        ProbVec q = sample_simplex(d_s, rng);
        KCopyPair pr{p, q, false, {}, {}};
        pr.activated = classify_target(p, q, ctx, grid).cls == TargetClass::catalytic_only;
        bool settled = ctx.is_degenerate() && (p.min() > q.min() || p.max() < q.max());
        for (size_t k = 1; pr.activated && !settled && k <= k_max; k++) {
            try {
                if (kcopy_transformable(p, q, k, ctx, Arithmetic::floating, cap)) {
                    pr.min_k = k;
                    settled = true;
                }
            } catch (const ResourceLimitError &) {
                pr.cap_breach_at = k;
                settled = true;
            }
        }
        out.pairs[i] = std::move(pr);
    });
    for (const auto &pr : out.pairs) {
        out.n_activated += pr.activated;
        out.cap_breaches += pr.cap_breach_at.has_value();
    }
    for (size_t k = 1; k <= k_max; k++) {
        size_t hits = 0;
        for (const auto &pr : out.pairs) {
            hits += pr.activated && pr.min_k && *pr.min_k <= k;
        }
        auto est = bernoulli_estimate(hits, out.n_activated);
        out.points.push_back({k, est.mean, est.ci95});
    }
    return out;
}

TargetSpec TargetSpec::parse(const std::string &text, size_t default_count) {
    TargetSpec t;
    if (text == "sample") {
        t.count = default_count;
        return t;
    }
    auto colon = text.find(':');
    std::string mode = text.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    size_t used = 0;
    try {
        if (mode == "sample" && !arg.empty()) {
            unsigned long long n = std::stoull(arg, &used);
            if (used == arg.size() && n >= 1) {
                t.count = (size_t)n;
                return t;
            }
        } else if (mode == "grid" && !arg.empty()) {
            double step = std::stod(arg, &used);
            double inv = 1 / step;
            if (used == arg.size() && step > 0 && step <= 1 && std::abs(inv - std::round(inv)) < 1e-9) {
                t.mode = Mode::grid;
                t.step = step;
                return t;
            }
        }
    } catch (const std::exception &) {
    }
    throw std::invalid_argument("targets must be sample, sample:<N> or grid:<step> with 1/step an integer; got '" + text + "'");
}

std::string TargetSpec::str() const {
    return mode == Mode::sample ? "sample:" + std::to_string(count) : "grid:" + format_number(step);
}

ThermalContext ExperimentConfig::context() const {
    if (energies.empty()) {
        return ThermalContext::degenerate(d_s);
    }
    return ThermalContext::from_energies(energies, beta);
}

void ExperimentConfig::validate() const {
    auto fail = [](const std::string &msg) { throw std::invalid_argument(msg); };
    const std::vector<std::string> known{"fig2", "fig3", "fig4", "fig5", "fig6"};
    if (std::find(known.begin(), known.end(), experiment) == known.end()) {
        fail("unknown experiment '" + experiment + "'");
    }
    if (d_s < 2) {
        fail("d_S must be at least 2");
    }
    if (!energies.empty() && energies.size() != d_s) {
        fail("energies must have d_S entries");
    }
    if (n_c < 1 || n_s < 1 || n_pairs < 1 || n_inputs < 1 || k_max < 1) {
        fail("trial counts and k_max must be at least 1");
    }
    if (settings.empty()) {
        fail("at least one (mu, gamma) setting is required");
    }
    for (const auto &s : settings) {
        if (!(s.mu >= 0 && s.mu < 1)) {
            fail("mu must lie in [0, 1)");
        }
        if (!(s.gamma > 0 && s.gamma <= 1)) {
            fail("gamma must lie in (0, 1]");
        }
    }
    bool needs_random = experiment == "fig2" || experiment == "fig4" || experiment == "fig5";
    if (needs_random) {
        if (d_c.empty() || samplers.empty()) {
            fail(experiment + " needs d_C values and at least one sampler");
        }
        for (uint64_t d : d_c) {
            if (d < 2) {
                fail("d_C values must be at least 2");
            }
        }
    }
    if (experiment == "fig2" || experiment == "fig4") {
        if (!p || p->dim() != d_s) {
            fail(experiment + " needs an input state p of dimension d_S");
        }
    }
    if (experiment == "fig2" && (!q || q->dim() != d_s)) {
        fail("fig2 needs a target state q of dimension d_S");
    }
    if (experiment == "fig4") {
        TargetSpec::parse(targets, n_s);
        if (boundary_resolution < 1) {
            fail("boundary resolution must be at least 1");
        }
    }
    if (experiment == "fig6") {
        if (r_values.empty() || n_values.empty()) {
            fail("fig6 needs r values and qubit counts");
        }
        for (double r : r_values) {
            Sampler::multicopy(r, 1);
        }
        for (uint64_t n : n_values) {
            Sampler::multicopy(0, n);
        }
    }
}

std::vector<std::string> preset_names() {
    return {"fig2", "fig3", "fig4", "fig5", "fig6", "appendix-d4", "appendix-d5"};
}

ExperimentConfig preset(const std::string &name) {
    const ProbVec p_star({0.65, 0.2, 0.15});
    const ProbVec q_star({0.5, 0.4, 0.1});
    ExperimentConfig cfg;
    if (name == "fig2") {
        cfg.experiment = "fig2";
        cfg.d_c = {4, 8, 16, 32, 64, 128, 256};
        cfg.samplers = {Sampler::of(Sampler::Kind::rayleigh), Sampler::of(Sampler::Kind::uniform),
                        Sampler::of(Sampler::Kind::exponential)};
        cfg.p = p_star;
        cfg.q = q_star;
    } else if (name == "fig3") {
        cfg.experiment = "fig3";
        cfg.d_s = 4;
    } else if (name == "fig4") {
        cfg.experiment = "fig4";
        cfg.d_c = {16, 64, 256};
        cfg.samplers = {Sampler::of(Sampler::Kind::exponential)};
        cfg.p = p_star;
    } else if (name == "fig5" || name == "appendix-d4" || name == "appendix-d5") {
        cfg.experiment = "fig5";
        cfg.d_c = {16, 64, 256};
        cfg.samplers = {Sampler::of(Sampler::Kind::exponential)};
        if (name != "fig5") {
            cfg.d_s = name == "appendix-d4" ? 4 : 5;
            cfg.settings = {MuGamma{0.05, 0.9}, MuGamma{0.1, 0.8}};
        }
    } else if (name == "fig6") {
        cfg.experiment = "fig6";
        cfg.r_values = {0.1, 0.2, 0.3, 0.4};
        cfg.n_values = {4, 8, 10};
    } else {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    return cfg;
}

ExperimentResult run_experiment(const ExperimentConfig &cfg) {
    cfg.validate();
    if (cfg.experiment == "fig2") {
        return run_fig2(cfg);
    }
    if (cfg.experiment == "fig3") {
        return run_fig3(cfg);
    }
    if (cfg.experiment == "fig4") {
        return run_fig4(cfg);
    }
    if (cfg.experiment == "fig5") {
        return run_f_sweep(cfg, random_sources(cfg), false);
    }
    std::vector<CatalystSource> sources;
    for (uint64_t n : cfg.n_values) {
        for (double r : cfg.r_values) {
            Sampler s = Sampler::multicopy(r, n);
            sources.push_back({s, s.dim(0)});
        }
    }
    return run_f_sweep(cfg, sources, true);
}

}  // namespace catlab
