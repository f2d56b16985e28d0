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


#include "io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace catlab {

namespace {

std::string trim(const std::string &s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return "";
    }
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) {
        out.push_back(trim(item));
    }
    return out;
}

double parse_double(const std::string &s) {
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    if (used != s.size()) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    return v;
}

json parse_json(const std::string &text, const std::string &what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument("malformed " + what + " JSON: " + e.what());
    }
}

std::vector<double> doubles_from_json(const json &j, const std::string &what) {
    if (!j.is_array()) {
        throw std::invalid_argument(what + " must be an array of numbers");
    }
    std::vector<double> out;
    for (const auto &x : j) {
        if (!x.is_number()) {
            throw std::invalid_argument(what + " must be an array of numbers");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

template <typename T>
T get_as(const json &j, const std::string &key) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &) {
        throw std::invalid_argument("config key '" + key + "' has the wrong type");
    }
}

}  // namespace

std::string read_argument(const std::string &text) {
    if (text.empty() || text[0] != '@') {
        return text;
    }
    std::ifstream in(text.substr(1));
    if (!in) {
        throw std::invalid_argument("cannot read '" + text.substr(1) + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ProbVec parse_probvec(const std::string &raw) {
    std::string text = trim(read_argument(raw));
    if (text.empty()) {
        throw std::invalid_argument("empty probability vector");
    }
    if (text[0] == '[' || text[0] == '{') {
        json j = parse_json(text, "state");
        if (j.is_object()) {
            if (!j.contains("p") || j.size() != 1) {
                throw std::invalid_argument("state JSON object must have exactly the key \"p\"");
            }
            j = j["p"];
        }
        return ProbVec(doubles_from_json(j, "state"));
    }
    std::vector<double> v;
    for (const auto &item : split(text, ',')) {
        v.push_back(parse_double(item));
    }
    return ProbVec(std::move(v));
}

json probvec_json(const ProbVec &p) {
    return json{{"p", std::vector<double>(p.entries().begin(), p.entries().end())}};
}

ThermalContext parse_context(const std::string &raw) {
    std::string text = trim(read_argument(raw));
    json j = parse_json(text, "context");
    if (!j.is_object()) {
        throw std::invalid_argument("context must be a JSON object");
    }
    if (j.contains("degenerate")) {
        if (j.size() != 1 || !j["degenerate"].is_number_unsigned()) {
            throw std::invalid_argument("degenerate context must look like {\"degenerate\": d}");
        }
        return ThermalContext::degenerate(j["degenerate"].get<size_t>());
    }
    if (!j.contains("energies")) {
        throw std::invalid_argument("context needs \"energies\" or \"degenerate\"");
    }
    for (const auto &[key, value] : j.items()) {
        if (key != "energies" && key != "beta") {
            throw std::invalid_argument("unknown context key '" + key + "'");
        }
    }
    double beta = 1.0;
    if (j.contains("beta")) {
        if (!j["beta"].is_number()) {
            throw std::invalid_argument("beta must be a number");
        }
        beta = j["beta"].get<double>();
    }
    return ThermalContext::from_energies(doubles_from_json(j["energies"], "energies"), beta);
}

json context_json(const ThermalContext &ctx) {
    if (ctx.is_degenerate()) {
        return json{{"degenerate", ctx.dim()}};
    }
    return json{
        {"energies", std::vector<double>(ctx.energies().begin(), ctx.energies().end())},
        {"beta", ctx.beta()},
    };
}

AlphaGrid parse_alpha_grid(const std::string &raw) {
    std::string text = trim(read_argument(raw));
    if (text == "default") {
        return AlphaGrid::default_grid();
    }
    std::vector<double> values;
    bool inf = false;
    for (const auto &item : split(text, ',')) {
        if (item == "inf") {
            inf = true;
        } else {
            values.push_back(parse_double(item));
        }
    }
    return AlphaGrid::from_values(values, inf);
}

mpq_class parse_rational(const std::string &raw) {
    std::string s = trim(raw);
    auto fail = [&]() -> mpq_class { throw std::invalid_argument("not a rational number: '" + raw + "'"); };
    if (s.empty()) {
        return fail();
    }
    if (s.find('/') != std::string::npos) {
        auto parts = split(s, '/');
        if (parts.size() != 2) {
            return fail();
        }
        mpz_class num, den;
        if (num.set_str(parts[0], 10) != 0 || den.set_str(parts[1], 10) != 0 || den == 0) {
            return fail();
        }
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    // Decimal with optional exponent: sign, digits, optional fraction, optional e[+-]digits.
    size_t i = 0;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
        negative = s[i] == '-';
        i++;
    }
    std::string digits;
    long scale = 0;
    bool any = false;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) {
        digits += s[i++];
        any = true;
    }
    if (i < s.size() && s[i] == '.') {
        i++;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
            digits += s[i++];
            scale--;
            any = true;
        }
    }
    if (!any) {
        return fail();
    }
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        i++;
        std::string exp;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            exp += s[i++];
        }
        size_t start = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
            exp += s[i++];
        }
        if (i == start || exp.size() > 6) {
            return fail();
        }
        scale += std::stol(exp);
    }
    if (i != s.size()) {
        return fail();
    }
    mpz_class num(digits, 10);
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, (unsigned long)std::labs(scale));
    mpq_class q = scale >= 0 ? mpq_class(num * pow10) : mpq_class(num, pow10);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
}

mpq_class rational_from_json(const json &j) {
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return mpq_class(mpz_class(j.dump(), 10));
    }
    if (j.is_number_float()) {
        // The JSON token is re-read as an exact decimal, not through a binary double.
        return parse_rational(j.dump());
    }
    throw std::invalid_argument("expected a rational number, got " + j.dump());
}

std::vector<mpq_class> parse_rational_vector(const std::string &raw) {
    std::string text = trim(read_argument(raw));
    std::vector<mpq_class> out;
    if (!text.empty() && text[0] == '[') {
        json j = parse_json(text, "rational vector");
        for (const auto &x : j) {
            out.push_back(rational_from_json(x));
        }
        return out;
    }
    for (const auto &item : split(text, ',')) {
        out.push_back(parse_rational(item));
    }
    return out;
}

std::vector<std::vector<mpq_class>> parse_rational_matrix(const std::string &raw) {
    json j = parse_json(trim(read_argument(raw)), "channel");
    if (!j.is_array()) {
        throw std::invalid_argument("channel must be a JSON array of rows");
    }
    std::vector<std::vector<mpq_class>> rows;
    for (const auto &row : j) {
        if (!row.is_array()) {
            throw std::invalid_argument("channel rows must be arrays");
        }
        std::vector<mpq_class> r;
        for (const auto &x : row) {
            r.push_back(rational_from_json(x));
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string rational_string(const mpq_class &x) {
    return x.get_str();
}

ExperimentConfig config_from_json(const json &j) {
    if (!j.is_object()) {
        throw std::invalid_argument("config must be a JSON object");
    }
    ExperimentConfig cfg;
    if (j.contains("preset")) {
        cfg = preset(get_as<std::string>(j, "preset"));
    }
    for (const auto &[key, value] : j.items()) {
        if (key == "preset") {
            continue;
        } else if (key == "experiment") {
            cfg.experiment = get_as<std::string>(j, key);
        } else if (key == "d_S") {
            cfg.d_s = get_as<size_t>(j, key);
        } else if (key == "d_C") {
            cfg.d_c = get_as<std::vector<uint64_t>>(j, key);
        } else if (key == "mu" || key == "gamma") {
            if (cfg.settings.size() != 1) {
                throw std::invalid_argument("scalar " + key + " needs exactly one setting; use \"settings\"");
            }
            (key == "mu" ? cfg.settings[0].mu : cfg.settings[0].gamma) = get_as<double>(j, key);
        } else if (key == "settings") {
            cfg.settings.clear();
            if (!value.is_array()) {
                throw std::invalid_argument("settings must be an array of {mu, gamma} objects");
            }
            for (const auto &s : value) {
                if (!s.is_object() || !s.contains("mu") || !s.contains("gamma") || s.size() != 2) {
                    throw std::invalid_argument("settings must be an array of {mu, gamma} objects");
                }
                cfg.settings.push_back({get_as<double>(s, "mu"), get_as<double>(s, "gamma")});
            }
        } else if (key == "N_C") {
            cfg.n_c = get_as<size_t>(j, key);
        } else if (key == "N_S") {
            cfg.n_s = get_as<size_t>(j, key);
        } else if (key == "samplers") {
            cfg.samplers.clear();
            for (const auto &name : get_as<std::vector<std::string>>(j, key)) {
                cfg.samplers.push_back(Sampler::parse(name));
            }
        } else if (key == "seed") {
            cfg.seed = get_as<uint64_t>(j, key);
        } else if (key == "energies") {
            cfg.energies = get_as<std::vector<double>>(j, key);
        } else if (key == "beta") {
            cfg.beta = get_as<double>(j, key);
        } else if (key == "p" || key == "q") {
            ProbVec v(doubles_from_json(value, key));
            (key == "p" ? cfg.p : cfg.q) = v;
        } else if (key == "k_max") {
            cfg.k_max = get_as<size_t>(j, key);
        } else if (key == "n_pairs") {
            cfg.n_pairs = get_as<size_t>(j, key);
        } else if (key == "n_inputs") {
            cfg.n_inputs = get_as<size_t>(j, key);
        } else if (key == "r_values") {
            cfg.r_values = get_as<std::vector<double>>(j, key);
        } else if (key == "n_values") {
            cfg.n_values = get_as<std::vector<uint64_t>>(j, key);
        } else if (key == "targets") {
            cfg.targets = get_as<std::string>(j, key);
        } else if (key == "boundary_resolution") {
            cfg.boundary_resolution = get_as<size_t>(j, key);
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
    return cfg;
}

json config_json(const ExperimentConfig &cfg) {
    json j;
    j["experiment"] = cfg.experiment;
    j["d_S"] = cfg.d_s;
    j["d_C"] = cfg.d_c;
    json settings = json::array();
    for (const auto &s : cfg.settings) {
        settings.push_back({{"mu", s.mu}, {"gamma", s.gamma}});
    }
    j["settings"] = settings;
    j["N_C"] = cfg.n_c;
    j["N_S"] = cfg.n_s;
    std::vector<std::string> samplers;
    for (const auto &s : cfg.samplers) {
        samplers.push_back(s.name());
    }
    j["samplers"] = samplers;
    j["seed"] = cfg.seed;
    j["energies"] = cfg.energies;
    j["beta"] = cfg.beta;
    if (cfg.p) {
        j["p"] = probvec_json(*cfg.p)["p"];
    }
    if (cfg.q) {
        j["q"] = probvec_json(*cfg.q)["p"];
    }
    j["k_max"] = cfg.k_max;
    j["n_pairs"] = cfg.n_pairs;
    j["n_inputs"] = cfg.n_inputs;
    j["r_values"] = cfg.r_values;
    j["n_values"] = cfg.n_values;
    j["targets"] = cfg.targets;
    j["boundary_resolution"] = cfg.boundary_resolution;
    return j;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read config '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return config_from_json(parse_json(buf.str(), "config"));
}

}  // namespace catlab
