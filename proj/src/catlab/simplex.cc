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

#include "simplex.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace catlab {

ProbVec::ProbVec(std::vector<double> entries) : p_(std::move(entries)) {
    if (p_.empty()) {
        throw std::invalid_argument("probability vector must have at least one entry");
    }
    double sum = 0;
    for (size_t i = 0; i < p_.size(); i++) {
        double &x = p_[i];
        if (!std::isfinite(x)) {
            throw std::invalid_argument("probability entry " + std::to_string(i) + " is not finite");
        }
        if (x < 0) {
            if (x < -kClampTolerance) {
                throw std::invalid_argument(
                    "probability entry " + std::to_string(i) + " is negative (" + std::to_string(x) + ")");
            }
            x = 0;
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > kIngestTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "probability entries sum to " << sum << ", not 1";
        throw std::invalid_argument(msg.str());
    }
    // Sums within rounding of 1 are left alone, so re-ingesting a normalized vector is exact.
    if (std::abs(sum - 1.0) > (double)p_.size() * 0x1.0p-52) {
        for (double &x : p_) {
            x /= sum;
        }
    }
}

ProbVec ProbVec::uniform(size_t dim) {
    if (dim == 0) {
        throw std::invalid_argument("uniform distribution needs dim >= 1");
    }
    return ProbVec(std::vector<double>(dim, 1.0 / (double)dim));
}

ProbVec ProbVec::point_mass(size_t dim, size_t index) {
    if (index >= dim) {
        throw std::invalid_argument("point mass index out of range");
    }
    std::vector<double> v(dim, 0.0);
    v[index] = 1.0;
    return ProbVec(std::move(v));
}

double ProbVec::max() const {
    return *std::max_element(p_.begin(), p_.end());
}

double ProbVec::min() const {
    return *std::min_element(p_.begin(), p_.end());
}

size_t ProbVec::support_size() const {
    return (size_t)std::count_if(p_.begin(), p_.end(), [](double x) { return x > 0; });
}

std::string ProbVec::str() const {
    std::ostringstream out;
    out.precision(17);
    out << "(";
    for (size_t i = 0; i < p_.size(); i++) {
        if (i) {
            out << ", ";
        }
        out << p_[i];
    }
    out << ")";
    return out.str();
}

void check_dim_cap(size_t requested, size_t cap, const char *what) {
    if (requested > cap) {
        throw ResourceLimitError(
            std::string(what) + ": " + std::to_string(requested) + " entries exceeds the cap of " +
                std::to_string(cap),
            requested,
            cap);
    }
}

ProbVec tensor(const ProbVec &a, const ProbVec &b, size_t cap) {
    size_t n = a.dim();
    size_t m = b.dim();
    if (m != 0 && n > cap / m) {
        throw ResourceLimitError("tensor product exceeds the dimension cap", SIZE_MAX, cap);
    }
    check_dim_cap(n * m, cap, "tensor product");
    std::vector<double> out(n * m);
    for (size_t i = 0; i < n; i++) {
        double ai = a[i];
        for (size_t j = 0; j < m; j++) {
            out[i * m + j] = ai * b[j];
        }
    }
    return ProbVec(std::move(out));
}

ProbVec tensor_power(const ProbVec &a, size_t k, size_t cap) {
    ProbVec result(std::vector<double>{1.0});
    for (size_t i = 0; i < k; i++) {
        result = tensor(result, a, cap);
    }
    return result;
}

ProbVec direct_sum(std::span<const WeightedBlock> blocks, size_t cap) {
    if (blocks.empty()) {
        throw std::invalid_argument("direct sum of zero blocks");
    }
    double total_weight = 0;
    size_t total_dim = 0;
    for (const auto &b : blocks) {
        if (!(b.weight >= 0)) {
            throw std::invalid_argument("direct sum weights must be nonnegative");
        }
        total_weight += b.weight;
        total_dim += b.block.dim();
    }
    if (std::abs(total_weight - 1.0) > kIngestTolerance) {
        throw std::invalid_argument("direct sum weights sum to " + std::to_string(total_weight) + ", not 1");
    }
    check_dim_cap(total_dim, cap, "direct sum");
    std::vector<double> out;
    out.reserve(total_dim);
    for (const auto &b : blocks) {
        for (double x : b.block.entries()) {
            out.push_back(b.weight * x);
        }
    }
    return ProbVec(std::move(out));
}

double trace_distance(const ProbVec &a, const ProbVec &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(
            "trace distance between dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    }
    double total = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        total += std::abs(a[i] - b[i]);
    }
    return std::min(1.0, 0.5 * total);
}

std::vector<double> sorted_desc(std::span<const double> entries) {
    std::vector<double> v(entries.begin(), entries.end());
    std::stable_sort(v.begin(), v.end(), std::greater<>());
    return v;
}

ProbVec sort_desc(const ProbVec &a) {
    return ProbVec(sorted_desc(a.entries()));
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Seed Seed::child(uint64_t salt) const {
    return Seed{splitmix64(root ^ splitmix64(salt + 0x632BE59BD9B4E019ULL)), stream};
}

std::mt19937_64 make_engine(Seed seed) {
    uint64_t a = splitmix64(seed.root);
    uint64_t b = splitmix64(a ^ splitmix64(seed.stream + 0xD1B54A32D192ED03ULL));
    std::seed_seq seq{(uint32_t)a, (uint32_t)(a >> 32), (uint32_t)b, (uint32_t)(b >> 32)};
    return std::mt19937_64(seq);
}

double uniform_open01(std::mt19937_64 &rng) {
    // (k + 0.5) / 2^53 for k in [0, 2^53) never hits 0 or 1.
    uint64_t k = rng() >> 11;
    return ((double)k + 0.5) * 0x1.0p-53;
}

ProbVec sample_simplex(size_t dim, std::mt19937_64 &rng) {
    std::vector<double> x(dim);
    double total = 0;
    for (auto &e : x) {
        e = -std::log(uniform_open01(rng));
        total += e;
    }
    for (auto &e : x) {
        e /= total;
    }
    return ProbVec(std::move(x));
}

}  // namespace catlab
