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

#ifndef CATLAB_SIMPLEX_H
#define CATLAB_SIMPLEX_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catlab {

/// Sum tolerance applied when a probability vector is ingested.
constexpr double kIngestTolerance = 1e-9;
/// Slack used by every internal comparison of partial sums or curves.
constexpr double kCompareTolerance = 1e-12;
/// Entries in [-kClampTolerance, 0) are treated as rounding noise and set to 0.
constexpr double kClampTolerance = 1e-12;
/// Default cap on the number of entries of any materialized distribution.
constexpr size_t kDefaultDimCap = size_t{1} << 26;

/// Thrown when an operation would materialize more entries than allowed.
struct ResourceLimitError : std::runtime_error {
    size_t requested;
    size_t cap;
    ResourceLimitError(const std::string &what, size_t requested, size_t cap)
        : std::runtime_error(what), requested(requested), cap(cap) {
    }
};

/// Thrown when a quantity is undefined for the given arguments (support violations etc).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A finite probability distribution: nonnegative entries summing to one.
///
/// This is the diagonal of a block-diagonal state in the energy eigenbasis. Construction
/// validates the input, clamps tiny negative rounding noise to zero and renormalizes so that
/// the stored entries sum to one up to a single rounding pass.
class ProbVec {
   public:
    ProbVec() = default;
    explicit ProbVec(std::vector<double> entries);

    static ProbVec uniform(size_t dim);
    static ProbVec point_mass(size_t dim, size_t index);

    size_t dim() const {
        return p_.size();
    }
    double operator[](size_t i) const {
        return p_[i];
    }
    std::span<const double> entries() const {
        return p_;
    }
    const std::vector<double> &vec() const {
        return p_;
    }
    double max() const;
    double min() const;
    size_t support_size() const;

    bool operator==(const ProbVec &other) const = default;

    std::string str() const;

   private:
    std::vector<double> p_;
};

/// Throws ResourceLimitError when `requested` exceeds `cap`.
void check_dim_cap(size_t requested, size_t cap, const char *what);

/// Kronecker product: entry (i, j) at index i * b.dim() + j equals a_i * b_j.
ProbVec tensor(const ProbVec &a, const ProbVec &b, size_t cap = kDefaultDimCap);

/// k-fold tensor power; k = 0 gives the one-point distribution.
ProbVec tensor_power(const ProbVec &a, size_t k, size_t cap = kDefaultDimCap);

struct WeightedBlock {
    double weight;
    ProbVec block;
};

/// Concatenation of weight-scaled blocks. Weights must be nonnegative and sum to one.
ProbVec direct_sum(std::span<const WeightedBlock> blocks, size_t cap = kDefaultDimCap);

/// Half the l1 distance between two distributions of equal dimension.
double trace_distance(const ProbVec &a, const ProbVec &b);

/// Entries in nonincreasing order; ties keep their original relative order.
ProbVec sort_desc(const ProbVec &a);

/// Sorted (nonincreasing) copy of raw entries, without validation.
std::vector<double> sorted_desc(std::span<const double> entries);

/// Counter-based seed. A (root, stream) pair names one reproducible random sequence.
struct Seed {
    uint64_t root = 0;
    uint64_t stream = 0;

    /// A child seed whose streams do not collide with this seed's streams.
    Seed child(uint64_t salt) const;
};

uint64_t splitmix64(uint64_t x);

/// Engine seeded by mixing root and stream, independent of evaluation order.
std::mt19937_64 make_engine(Seed seed);

/// Uniform double in the open interval (0, 1) built from 53 random bits.
double uniform_open01(std::mt19937_64 &rng);

/// Sample uniformly from the probability simplex (normalized i.i.d. unit exponentials).
ProbVec sample_simplex(size_t dim, std::mt19937_64 &rng);

}  // namespace catlab

#endif
