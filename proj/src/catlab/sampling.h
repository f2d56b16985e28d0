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


#ifndef CATLAB_SAMPLING_H
#define CATLAB_SAMPLING_H

#include <cstdint>
#include <string>
#include <vector>

#include "simplex.h"

namespace catlab {

/// Catalyst eigenvalue distribution. Draws are i.i.d. and normalized, except multicopy, which is
/// the fixed state (1 - r, r)^(x)n.
struct Sampler {
    enum class Kind { rayleigh, uniform, exponential, dirichlet_flat, multicopy };

    Kind kind = Kind::exponential;
    double r = 0;
    uint64_t n = 0;

    static Sampler of(Kind kind);
    static Sampler multicopy(double r, uint64_t n);
    /// "rayleigh", "uniform", "exponential", "dirichlet_flat" or "multicopy:<r>:<n>".
    static Sampler parse(const std::string &text);

    std::string name() const;
    bool random() const {
        return kind != Kind::multicopy;
    }
    /// Catalyst dimension: d_c for the random kinds, 2^n for multicopy.
    uint64_t dim(uint64_t d_c) const;

    bool operator==(const Sampler &other) const = default;
};

/// One raw (unnormalized) draw by inversion of a 53-bit uniform.
double sample_weight(Sampler::Kind kind, std::mt19937_64 &rng);

ProbVec sample_catalyst(const Sampler &sampler, uint64_t d_c, Seed seed);

/// count catalysts; catalyst i uses seed.child(i). A multicopy bank has one entry.
std::vector<ProbVec> sample_catalysts(const Sampler &sampler, uint64_t d_c, size_t count, Seed seed);

struct BernoulliEstimate {
    double mean = 0;
    /// 1.96 sqrt(mean (1 - mean) / trials).
    double ci95 = 0;
    size_t successes = 0;
    size_t trials = 0;
};

BernoulliEstimate bernoulli_estimate(size_t successes, size_t trials);

}  // namespace catlab

#endif
