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


#ifndef CATLAB_DILATION_H
#define CATLAB_DILATION_H

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "simplex.h"

namespace catlab {

/// Classical channel with exact rational transition probabilities.
///
/// rows[i][j] = r(j|i): row i is the output distribution for input i.
struct RationalChannel {
    std::vector<std::vector<mpq_class>> rows;
    std::vector<mpq_class> gibbs;

    size_t dim() const {
        return gibbs.size();
    }
    /// Square, nonnegative, and every row sums to exactly 1.
    bool stochastic() const;
    /// sum_i g_i r(j|i) == g_j for every j.
    bool gibbs_preserving() const;
    std::vector<mpq_class> apply(const std::vector<mpq_class> &p) const;

    static RationalChannel identity(const std::vector<mpq_class> &gibbs);
    /// r(j|i) = g_j.
    static RationalChannel thermalization(const std::vector<mpq_class> &gibbs);
};

/// Permutation of an equally weighted shell whose coarse-graining onto system blocks is the channel.
///
/// Input block i owns block_size[i] = L d_i consecutive slots, where g_i = d_i / D. Block i sends
/// counts[i][j] = L d_i r(j|i) of its slots to block j.
struct PermutationDilation {
    uint64_t shell_size = 0;
    std::vector<uint64_t> block_size;
    std::vector<uint64_t> block_offset;
    std::vector<std::vector<uint64_t>> counts;
    /// assignment[s] is the output slot of input slot s.
    std::vector<uint64_t> assignment;

    size_t dim() const {
        return block_size.size();
    }
    size_t block_of(uint64_t slot) const;
};

/// Refuses (DomainError) a channel that is not stochastic or not Gibbs-preserving.
PermutationDilation build_dilation(const RationalChannel &ch, size_t cap = kDefaultDimCap);

/// Splits p_i evenly over the slots of block i.
std::vector<mpq_class> shell_embed(const PermutationDilation &dil, const std::vector<mpq_class> &p);
std::vector<mpq_class> permute_shell(const PermutationDilation &dil, const std::vector<mpq_class> &shell);
std::vector<mpq_class> invert_shell(const PermutationDilation &dil, const std::vector<mpq_class> &shell);
std::vector<mpq_class> block_marginal(const PermutationDilation &dil, const std::vector<mpq_class> &shell);

/// Channel output computed through the dilation: embed, permute, coarse-grain.
std::vector<mpq_class> apply_dilation_exact(const PermutationDilation &dil, const std::vector<mpq_class> &p);
ProbVec apply_dilation(const PermutationDilation &dil, const ProbVec &p);

mpq_class exact_trace_distance(const std::vector<mpq_class> &a, const std::vector<mpq_class> &b);

struct DilationErrors {
    /// T(channel(p), q) on the system.
    mpq_class system;
    /// T(dilated shell output, shell embedding of q).
    mpq_class shell;
};

DilationErrors dilation_errors(
    const PermutationDilation &dil, const std::vector<mpq_class> &p, const std::vector<mpq_class> &q);

/// Every check on one channel and input, exactly: block-count marginals, bijectivity, agreement
/// with the matrix product, and round trip through the inverse permutation.
struct DilationVerification {
    bool counts_ok = false;
    bool bijection_ok = false;
    bool output_ok = false;
    bool round_trip_ok = false;

    bool ok() const {
        return counts_ok && bijection_ok && output_ok && round_trip_ok;
    }
};

DilationVerification verify_dilation(
    const RationalChannel &ch, const PermutationDilation &dil, const std::vector<mpq_class> &p);

}  // namespace catlab

#endif
