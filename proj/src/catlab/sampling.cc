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


#include "sampling.h"

#include <cmath>
#include <stdexcept>

#include "table.h"

namespace catlab {

Sampler Sampler::of(Kind kind) {
    if (kind == Kind::multicopy) {
        throw std::invalid_argument("multicopy sampler needs r and n");
    }
    Sampler s;
    s.kind = kind;
    return s;
}

Sampler Sampler::multicopy(double r, uint64_t n) {
    if (!(r >= 0 && r < 0.5)) {
        throw std::invalid_argument("multicopy needs 0 <= r < 0.5");
    }
    if (n < 1 || n > 40) {
        throw std::invalid_argument("multicopy needs 1 <= n <= 40");
    }
    Sampler s;
    s.kind = Kind::multicopy;
    s.r = r;
    s.n = n;
    return s;
}

Sampler Sampler::parse(const std::string &text) {
    if (text == "rayleigh") {
        return of(Kind::rayleigh);
    }
    if (text == "uniform") {
        return of(Kind::uniform);
    }
    if (text == "exponential") {
        return of(Kind::exponential);
    }
    if (text == "dirichlet_flat") {
        return of(Kind::dirichlet_flat);
    }
    const std::string prefix = "multicopy:";
    if (text.rfind(prefix, 0) == 0) {
        std::string rest = text.substr(prefix.size());
        size_t colon = rest.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("multicopy sampler must look like multicopy:<r>:<n>");
        }
        size_t used_r = 0, used_n = 0;
        double r = std::stod(rest.substr(0, colon), &used_r);
        std::string ntext = rest.substr(colon + 1);
        unsigned long long n = std::stoull(ntext, &used_n);
        if (used_r != colon || used_n != ntext.size()) {
            throw std::invalid_argument("malformed multicopy sampler '" + text + "'");
        }
        return multicopy(r, n);
    }
    throw std::invalid_argument("unknown sampler '" + text + "'");
}

std::string Sampler::name() const {
    switch (kind) {
        case Kind::rayleigh:
            return "rayleigh";
        case Kind::uniform:
            return "uniform";
        case Kind::exponential:
            return "exponential";
        case Kind::dirichlet_flat:
            return "dirichlet_flat";
        case Kind::multicopy:
            return "multicopy:" + format_number(r) + ":" + std::to_string(n);
    }
    return "";
}

uint64_t Sampler::dim(uint64_t d_c) const {
    return kind == Kind::multicopy ? uint64_t{1} << n : d_c;
}

double sample_weight(Sampler::Kind kind, std::mt19937_64 &rng) {
    double u = uniform_open01(rng);
    switch (kind) {
        case Sampler::Kind::rayleigh:
            return std::sqrt(-2 * std::log(u));
        case Sampler::Kind::uniform:
            return u;
        case Sampler::Kind::exponential:
        case Sampler::Kind::dirichlet_flat:
            return -std::log(u);
        case Sampler::Kind::multicopy:
            break;
    }
    throw std::logic_error("multicopy has no random weights");
}

ProbVec sample_catalyst(const Sampler &sampler, uint64_t d_c, Seed seed) {
    if (sampler.kind == Sampler::Kind::multicopy) {
        return tensor_power(ProbVec({1 - sampler.r, sampler.r}), sampler.n);
    }
    if (d_c < 2) {
        throw std::invalid_argument("catalyst dimension must be at least 2");
    }
    check_dim_cap(d_c, kDefaultDimCap, "catalyst");
    auto rng = make_engine(seed);
    std::vector<double> x(d_c);
    double total = 0;
    for (auto &e : x) {
        e = sample_weight(sampler.kind, rng);
        total += e;
    }
    for (auto &e : x) {
        e /= total;
    }
    return ProbVec(std::move(x));
}

std::vector<ProbVec> sample_catalysts(const Sampler &sampler, uint64_t d_c, size_t count, Seed seed) {
    std::vector<ProbVec> out;
    if (!sampler.random()) {
        out.push_back(sample_catalyst(sampler, d_c, seed));
        return out;
    }
    out.reserve(count);
    for (size_t i = 0; i < count; i++) {
        out.push_back(sample_catalyst(sampler, d_c, seed.child(i)));
    }
    return out;
}

BernoulliEstimate bernoulli_estimate(size_t successes, size_t trials) {
    BernoulliEstimate e;
    e.successes = successes;
    e.trials = trials;
    if (trials > 0) {
        e.mean = (double)successes / (double)trials;
        e.ci95 = 1.96 * std::sqrt(e.mean * (1 - e.mean) / (double)trials);
    }
    return e;
}

}  // namespace catlab
