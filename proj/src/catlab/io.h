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


#ifndef CATLAB_IO_H
#define CATLAB_IO_H

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dilation.h"
#include "entropy.h"
#include "experiments.h"
#include "json.hpp"
#include "simplex.h"

namespace catlab {

using json = nlohmann::json;

/// The text itself, or the contents of the named file when text starts with '@'.
std::string read_argument(const std::string &text);

/// "0.5,0.25,0.25", a JSON array, or a JSON object {"p": [...]}. Accepts the '@file' form.
ProbVec parse_probvec(const std::string &text);
json probvec_json(const ProbVec &p);

/// {"energies": [...], "beta": b} or {"degenerate": d}. Accepts the '@file' form.
ThermalContext parse_context(const std::string &text);
json context_json(const ThermalContext &ctx);

/// "default" or a comma-separated list of orders, where "inf" adds infinity.
AlphaGrid parse_alpha_grid(const std::string &text);

/// "1/3", "2", "0.125" or "1e-3", converted exactly. Decimals are read as the exact decimal fraction.
mpq_class parse_rational(const std::string &text);
mpq_class rational_from_json(const json &j);
std::vector<mpq_class> parse_rational_vector(const std::string &text);
/// rows[i][j] = r(j|i), as a JSON array of arrays of numbers or rational strings.
std::vector<std::vector<mpq_class>> parse_rational_matrix(const std::string &text);
std::string rational_string(const mpq_class &x);

/// Reads a config object. A "preset" key starts from that preset; other keys override it.
/// Unknown keys are rejected.
ExperimentConfig config_from_json(const json &j);
json config_json(const ExperimentConfig &cfg);
ExperimentConfig load_config(const std::string &path);

}  // namespace catlab

#endif
