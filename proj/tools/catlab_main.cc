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


#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "catlab/catalysis.h"
#include "catlab/convex_split.h"
#include "catlab/dilation.h"
#include "catlab/experiments.h"
#include "catlab/io.h"
#include "catlab/majorization.h"
#include "catlab/runner.h"
#include "catlab/version.h"

using namespace catlab;

namespace {

// Exit codes: 0 computed (or positive decision), 1 negative decision, 2 usage or input error,
// 3 resource cap.
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

json number(double x) {
    return std::isfinite(x) ? json(x) : json(nullptr);
}

int emit(const json &doc, bool positive = true) {
    std::cout << doc.dump() << "\n";
    return positive ? 0 : kExitNegative;
}

ThermalContext context_or_degenerate(const std::string &text, size_t dim) {
    return text.empty() ? ThermalContext::degenerate(dim) : parse_context(text);
}

std::vector<uint64_t> parse_counts(const std::string &text) {
    std::vector<uint64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw std::invalid_argument("not a list of counts: '" + text + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw std::invalid_argument("empty list of counts");
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Catalysis and majorization toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    std::function<int()> handler;

    std::string p_text, q_text, ctx_text;

    // check
    auto *check = app.add_subcommand("check", "Order checks between two states");
    check->require_subcommand(1);
    auto *maj = check->add_subcommand("majorize", "Does p majorize q?");
    maj->add_option("--p", p_text, "Source state")->required();
    maj->add_option("--q", q_text, "Target state")->required();
    maj->add_flag("--json", "JSON output (the default)");
    maj->callback([&] {
        handler = [&] {
            auto r = majorization_check(parse_probvec(p_text), parse_probvec(q_text));
            return emit({{"result", r.holds}, {"margin", number(r.margin)}}, r.holds);
        };
    });
    auto *tmaj = check->add_subcommand("tmajorize", "Does p thermo-majorize q?");
    tmaj->add_option("--p", p_text, "Source state")->required();
    tmaj->add_option("--q", q_text, "Target state")->required();
    tmaj->add_option("--ctx", ctx_text, "Thermal context JSON (default: degenerate)");
    tmaj->add_flag("--json", "JSON output (the default)");
    tmaj->callback([&] {
        handler = [&] {
            auto p = parse_probvec(p_text);
            auto r = thermo_majorization_check(p, parse_probvec(q_text), context_or_degenerate(ctx_text, p.dim()));
            return emit({{"result", r.holds}, {"margin", number(r.margin)}}, r.holds);
        };
    });

    // catalysis
    auto *cat = app.add_subcommand("catalysis", "Second laws, Duan catalysts, copy numbers and bounds");
    cat->require_subcommand(1);
    std::string alphas_text = "default";
    auto *laws = cat->add_subcommand("second-laws", "F_alpha(p) >= F_alpha(q) on an alpha grid");
    laws->add_option("--p", p_text, "Source state")->required();
    laws->add_option("--q", q_text, "Target state")->required();
    laws->add_option("--ctx", ctx_text, "Thermal context JSON (default: degenerate)");
    laws->add_option("--alphas", alphas_text, "Alpha grid: 'default' or a list such as 0.5,2,inf");
    laws->add_flag("--json", "JSON output (the default)");
    laws->callback([&] {
        handler = [&] {
            auto p = parse_probvec(p_text);
            auto r = second_laws(p, parse_probvec(q_text), context_or_degenerate(ctx_text, p.dim()),
                                 parse_alpha_grid(alphas_text));
            return emit(
                {{"result", r.holds},
                 {"margin", number(r.margin)},
                 {"worst_alpha", number(r.worst_alpha)},
                 {"interior_margin", number(r.interior_margin)},
                 {"grid_sensitive", r.grid_sensitive}},
                r.holds);
        };
    });

    size_t k = 2, k_max = 12;
    bool exact = false;
    auto *duan = cat->add_subcommand("duan", "Catalytic check with the Duan catalyst for k copies");
    duan->add_option("--p", p_text, "Source state")->required();
    duan->add_option("--q", q_text, "Target state")->required();
    duan->add_option("--k", k, "Number of copies")->required()->check(CLI::PositiveNumber);
    duan->add_option("--ctx", ctx_text, "Thermal context JSON (default: degenerate)");
    duan->add_flag("--exact", exact, "Exact rational arithmetic");
    duan->add_flag("--json", "JSON output (the default)");
    duan->callback([&] {
        handler = [&] {
            auto p = parse_probvec(p_text);
            auto q = parse_probvec(q_text);
            auto ctx = context_or_degenerate(ctx_text, p.dim());
            auto spec = duan_state(p, q, k);
            auto r = duan_catalysis_check(p, q, k, ctx, exact ? Arithmetic::exact : Arithmetic::floating);
            return emit(
                {{"result", r.kcopy_ok && r.catalytic_ok},
                 {"kcopy_ok", r.kcopy_ok},
                 {"catalytic_ok", r.catalytic_ok},
                 {"catalyst_dim", spec.total_dim},
                 {"catalyst_entropy", number(spec.entropy())}},
                r.kcopy_ok && r.catalytic_ok);
        };
    });

    auto *mink = cat->add_subcommand("min-k", "Smallest k with p^k -> q^k");
    mink->add_option("--p", p_text, "Source state")->required();
    mink->add_option("--q", q_text, "Target state")->required();
    mink->add_option("--ctx", ctx_text, "Thermal context JSON (default: degenerate)");
    mink->add_option("--k-max", k_max, "Largest k tried")->check(CLI::PositiveNumber);
    mink->add_flag("--exact", exact, "Exact rational arithmetic");
    mink->add_flag("--json", "JSON output (the default)");
    mink->callback([&] {
        handler = [&] {
            auto p = parse_probvec(p_text);
            auto r = min_k_copy(p, parse_probvec(q_text), context_or_degenerate(ctx_text, p.dim()), k_max,
                                exact ? Arithmetic::exact : Arithmetic::floating);
            return emit({{"min_k", r ? json(*r) : json(nullptr)}, {"k_max", k_max}}, r.has_value());
        };
    });

    uint64_t d_s = 0, d_c = 0, n_copies = 0;
    double kappa = 0.5;
    std::string source_text, target_text, source_ctx_text, target_ctx_text;
    auto *bounds = cat->add_subcommand("bounds", "Embezzlement bound and finite-n conversion rate");
    bounds->add_option("--d-s", d_s, "System dimension")->required()->check(CLI::Range(uint64_t{2}, UINT64_MAX));
    bounds->add_option("--d-c", d_c, "Catalyst dimension")->required()->check(CLI::Range(uint64_t{2}, UINT64_MAX));
    bounds->add_option("--source", source_text, "Conversion source state");
    bounds->add_option("--target", target_text, "Conversion target state");
    bounds->add_option("--source-ctx", source_ctx_text, "Source thermal context (default: degenerate)");
    bounds->add_option("--target-ctx", target_ctx_text, "Target thermal context (default: degenerate)");
    bounds->add_option("--n", n_copies, "Number of source copies");
    bounds->add_option("--kappa", kappa, "Error exponent in (0, 1)");
    bounds->add_flag("--json", "JSON output (the default)");
    bounds->callback([&] {
        handler = [&] {
            json doc{{"eps_bnd", number(embezzlement_bound(d_s, d_c))}};
            if (!source_text.empty() || !target_text.empty()) {
                if (source_text.empty() || target_text.empty() || n_copies == 0) {
                    throw std::invalid_argument("conversion needs --source, --target and --n");
                }
                auto src = parse_probvec(source_text);
                auto tgt = parse_probvec(target_text);
                auto r = conversion_rate({kappa, n_copies, src, tgt, context_or_degenerate(source_ctx_text, src.dim()),
                                          context_or_degenerate(target_ctx_text, tgt.dim())});
                doc["conversion"] = {
                    {"r_n", number(r.r_n)},
                    {"m", r.m},
                    {"delta_bound", number(r.delta_bound)},
                    {"asymptotic", number(r.asymptotic)},
                    {"v", number(r.v)},
                    {"clamped_low", r.clamped_low},
                    {"clamped_high", r.clamped_high},
                };
            }
            return emit(doc);
        };
    });

    // convexsplit
    auto *cs = app.add_subcommand("convexsplit", "Swap-mixing channel and its error bounds");
    cs->require_subcommand(1);
    std::string rho_text, sigma_text, omega_text, n_list_text;
    size_t m_max = 1;
    bool json_out = false;
    auto *verify = cs->add_subcommand("verify", "Distance of the mixed state from sigma^(m+1), for m = 1..m-max");
    verify->add_option("--rho", rho_text, "System state")->required();
    verify->add_option("--sigma", sigma_text, "Catalyst copy state")->required();
    verify->add_option("--m-max", m_max, "Largest number of catalyst registers")->required()->check(CLI::PositiveNumber);
    verify->add_flag("--json", json_out, "JSON output instead of CSV");
    verify->callback([&] {
        handler = [&] {
            auto rho = parse_probvec(rho_text);
            auto sigma = parse_probvec(sigma_text);
            Table t{{"m", "empirical", "bound", "ratio", "catalyst_distance", "ok"}, {}};
            json rows = json::array();
            bool all_ok = true;
            for (size_t m = 1; m <= m_max; m++) {
                auto r = verify_convex_split(rho, sigma, m);
                all_ok = all_ok && r.ok;
                t.add({std::to_string(m), format_number(r.empirical), format_number(r.bound), format_number(r.ratio()),
                       format_number(r.catalyst_distance), r.ok ? "1" : "0"});
                rows.push_back({{"m", m},
                                {"empirical", r.empirical},
                                {"bound", r.bound},
                                {"ratio", r.ratio()},
                                {"catalyst_distance", r.catalyst_distance},
                                {"ok", r.ok}});
            }
            if (json_out) {
                return emit({{"result", all_ok}, {"rows", rows}}, all_ok);
            }
            std::cout << t.csv();
            return all_ok ? 0 : kExitNegative;
        };
    });
    auto *curve = cs->add_subcommand("curve", "Catalyst and system error bounds of the multi-copy protocol");
    curve->add_option("--rho", rho_text, "System source state")->required();
    curve->add_option("--sigma", sigma_text, "System target state")->required();
    curve->add_option("--omega", omega_text, "Single catalyst copy")->required();
    curve->add_option("--n", n_list_text, "Comma-separated copy numbers")->required();
    curve->add_option("--kappa", kappa, "Error exponent in (0, 1)");
    curve->add_option("--ctx", ctx_text, "System thermal context (default: degenerate)");
    curve->add_flag("--json", json_out, "JSON output instead of CSV");
    curve->callback([&] {
        handler = [&] {
            auto rho = parse_probvec(rho_text);
            auto omega = parse_probvec(omega_text);
            auto pts = theorem1_error_curve(rho, parse_probvec(sigma_text), omega, parse_counts(n_list_text), kappa,
                                            context_or_degenerate(ctx_text, rho.dim()),
                                            ThermalContext::degenerate(omega.dim()));
            Table t{{"n", "r_n", "m", "delta", "nu_bound", "eps_c_bound", "eps_s_bound", "vacuous"}, {}};
            json rows = json::array();
            for (const auto &pt : pts) {
                t.add({std::to_string(pt.n), format_number(pt.r_n), format_number(pt.m), format_number(pt.delta),
                       format_number(pt.nu_bound), format_number(pt.eps_c_bound), format_number(pt.eps_s_bound),
                       pt.vacuous ? "1" : "0"});
                rows.push_back({{"n", pt.n},
                                {"r_n", pt.r_n},
                                {"m", pt.m},
                                {"delta", pt.delta},
                                {"nu_bound", pt.nu_bound},
                                {"eps_c_bound", pt.eps_c_bound},
                                {"eps_s_bound", pt.eps_s_bound},
                                {"vacuous", pt.vacuous}});
            }
            if (json_out) {
                return emit({{"rows", rows}});
            }
            std::cout << t.csv();
            return 0;
        };
    });

    // dilate
    std::string channel_text, gibbs_text;
    auto *dil = app.add_subcommand("dilate", "Permutation dilation of a Gibbs-preserving rational channel");
    dil->add_option("--channel", channel_text, "JSON rows r(j|i) of rationals")->required();
    dil->add_option("--gibbs", gibbs_text, "Gibbs state as JSON rationals")->required();
    dil->add_option("--p", p_text, "Optional input to push through the dilation (rationals)");
    dil->add_flag("--json", "JSON output (the default)");
    dil->callback([&] {
        handler = [&] {
            RationalChannel ch{parse_rational_matrix(channel_text), parse_rational_vector(gibbs_text)};
            PermutationDilation d;
            try {
                d = build_dilation(ch);
            } catch (const DomainError &e) {
                return emit({{"verified", false}, {"error", e.what()}}, false);
            }
            std::vector<mpq_class> p = p_text.empty() ? ch.gibbs : parse_rational_vector(p_text);
            auto v = verify_dilation(ch, d, p);
            json counts = json::array();
            for (const auto &row : d.counts) {
                counts.push_back(row);
            }
            json doc{{"shell_size", d.shell_size}, {"block_size", d.block_size}, {"counts", counts}, {"verified", v.ok()}};
            if (!p_text.empty()) {
                std::vector<std::string> out;
                for (const auto &x : apply_dilation_exact(d, p)) {
                    out.push_back(rational_string(x));
                }
                doc["output"] = out;
            }
            return emit(doc, v.ok());
        };
    });

    // exp
    auto *exp = app.add_subcommand("exp", "Monte Carlo experiments");
    exp->require_subcommand(1);
    std::string config_path, preset_name, out_dir, targets_text;
    std::optional<uint64_t> seed;
    std::optional<size_t> n_c, n_s;
    for (const char *name : {"fig2", "fig3", "fig4", "fig5", "fig6"}) {
        auto *sub = exp->add_subcommand(name, std::string("Run the ") + name + " experiment");
        auto *cfg_opt = sub->add_option("--config", config_path, "Config JSON file");
        auto *preset_opt = sub->add_option("--preset", preset_name, "Start from a shipped preset");
        cfg_opt->excludes(preset_opt);
        sub->add_option("--out", out_dir, "Output directory")->required();
        sub->add_option("--seed", seed, "Root seed (required: no hidden entropy)")->required();
        sub->add_option("--n-c", n_c, "Catalysts per success estimate");
        sub->add_option("--n-s", n_s, "Targets per input state");
        if (std::string(name) == "fig4") {
            sub->add_option("--targets", targets_text, "sample, sample:<N> or grid:<step>");
        }
        sub->add_flag("--json", "JSON output (the default)");
        std::string which = name;
        sub->callback([&, which] {
            handler = [&, which] {
                ExperimentConfig cfg;
                if (!config_path.empty()) {
                    cfg = load_config(config_path);
                } else {
                    cfg = preset(preset_name.empty() ? which : preset_name);
                }
                if (cfg.experiment.empty()) {
                    cfg.experiment = which;
                }
                if (cfg.experiment != which) {
                    throw std::invalid_argument("config describes " + cfg.experiment + ", not " + which);
                }
                cfg.seed = *seed;
                if (n_c) {
                    cfg.n_c = *n_c;
                }
                if (n_s) {
                    cfg.n_s = *n_s;
                }
                if (!targets_text.empty()) {
                    cfg.targets = targets_text;
                }
                json summary = run_to_directory(cfg, out_dir);
                for (const auto &w : summary["warnings"]) {
                    std::cerr << "warning: " << w.get<std::string>() << "\n";
                }
                return emit(summary);
            };
        });
    }

    // presets
    auto *presets = app.add_subcommand("presets", "Shipped experiment configurations");
    presets->require_subcommand(1);
    auto *plist = presets->add_subcommand("list", "Names of the shipped presets");
    plist->callback([&] { handler = [&] { return emit(preset_names()); }; });
    auto *pshow = presets->add_subcommand("show", "Config JSON of one preset");
    pshow->add_option("name", preset_name, "Preset name")->required();
    pshow->callback([&] { handler = [&] { return emit(config_json(preset(preset_name))); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        return handler();
    } catch (const ResourceLimitError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
