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


#include "dilation.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "majorization.h"

namespace catlab {

namespace {

mpz_class lcm(const mpz_class &a, const mpz_class &b) {
    mpz_class out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

uint64_t to_u64(const mpz_class &z, size_t cap) {
    if (z < 0 || z > mpz_class((unsigned long)cap)) {
        throw ResourceLimitError("dilation shell exceeds the dimension cap of " + std::to_string(cap), SIZE_MAX, cap);
    }
    return (uint64_t)z.get_ui();
}

void check_dim(const PermutationDilation &dil, size_t n) {
    if (n != dil.dim()) {
        throw std::invalid_argument(
            "input of dimension " + std::to_string(n) + " for a dilation of dimension " + std::to_string(dil.dim()));
    }
}

void check_shell(const PermutationDilation &dil, size_t n) {
    if (n != dil.shell_size) {
        throw std::invalid_argument(
            "shell vector of size " + std::to_string(n) + " for shell size " + std::to_string(dil.shell_size));
    }
}

}  // namespace

bool RationalChannel::stochastic() const {
    if (rows.size() != dim() || dim() == 0) {
        return false;
    }
    for (const auto &row : rows) {
        if (row.size() != dim()) {
            return false;
        }
        mpq_class total = 0;
        for (const auto &x : row) {
            if (x < 0) {
                return false;
            }
            total += x;
        }
        if (total != 1) {
            return false;
        }
    }
    return true;
}

bool RationalChannel::gibbs_preserving() const {
    return stochastic() && apply(gibbs) == gibbs;
}

std::vector<mpq_class> RationalChannel::apply(const std::vector<mpq_class> &p) const {
    if (p.size() != dim()) {
        throw std::invalid_argument("channel input has the wrong dimension");
    }
    std::vector<mpq_class> out(dim(), mpq_class(0));
    for (size_t i = 0; i < dim(); i++) {
        for (size_t j = 0; j < dim(); j++) {
            out[j] += p[i] * rows[i][j];
        }
    }
    return out;
}

RationalChannel RationalChannel::identity(const std::vector<mpq_class> &gibbs) {
    RationalChannel ch{{}, gibbs};
    ch.rows.assign(gibbs.size(), std::vector<mpq_class>(gibbs.size(), mpq_class(0)));
    for (size_t i = 0; i < gibbs.size(); i++) {
        ch.rows[i][i] = 1;
    }
    return ch;
}

RationalChannel RationalChannel::thermalization(const std::vector<mpq_class> &gibbs) {
    return RationalChannel{std::vector<std::vector<mpq_class>>(gibbs.size(), gibbs), gibbs};
}

size_t PermutationDilation::block_of(uint64_t slot) const {
    auto it = std::upper_bound(block_offset.begin(), block_offset.end(), slot);
    return (size_t)(it - block_offset.begin()) - 1;
}

PermutationDilation build_dilation(const RationalChannel &ch, size_t cap) {
    size_t d = ch.dim();
    mpq_class gsum = 0;
    for (const auto &g : ch.gibbs) {
        if (g <= 0) {
            throw DomainError("Gibbs weights must be positive");
        }
        gsum += g;
    }
    if (gsum != 1) {
        throw DomainError("Gibbs weights sum to " + gsum.get_str() + ", not 1");
    }
    if (!ch.stochastic()) {
        throw DomainError("channel is not stochastic; dilation refused");
    }
    if (!ch.gibbs_preserving()) {
        throw DomainError("channel does not preserve the Gibbs state; dilation refused");
    }

    mpz_class denom = 1;
    for (const auto &g : ch.gibbs) {
        denom = lcm(denom, g.get_den());
    }
    std::vector<mpq_class> dvals(d);
    for (size_t i = 0; i < d; i++) {
        dvals[i] = ch.gibbs[i] * denom;
    }
    mpz_class scale = 1;
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            mpq_class n = dvals[i] * ch.rows[i][j];
            n.canonicalize();
            scale = lcm(scale, n.get_den());
        }
    }

    PermutationDilation dil;
    dil.shell_size = to_u64(denom * scale, cap);
    dil.block_size.resize(d);
    dil.block_offset.resize(d);
    dil.counts.assign(d, std::vector<uint64_t>(d, 0));
    uint64_t offset = 0;
    for (size_t i = 0; i < d; i++) {
        mpq_class size = dvals[i] * scale;
        dil.block_size[i] = to_u64(size.get_num(), cap);
        dil.block_offset[i] = offset;
        offset += dil.block_size[i];
        for (size_t j = 0; j < d; j++) {
            mpq_class n = size * ch.rows[i][j];
            n.canonicalize();
            dil.counts[i][j] = to_u64(n.get_num(), cap);
        }
    }

    // Lexicographic fill: input slots in order, each block's output share taken from the next
    // free slots of the target blocks in block order.
    dil.assignment.resize(dil.shell_size);
    std::vector<uint64_t> next_free(dil.block_offset);
    for (size_t i = 0; i < d; i++) {
        uint64_t s = dil.block_offset[i];
        for (size_t j = 0; j < d; j++) {
            for (uint64_t c = 0; c < dil.counts[i][j]; c++) {
                dil.assignment[s++] = next_free[j]++;
            }
        }
    }
    return dil;
}

std::vector<mpq_class> shell_embed(const PermutationDilation &dil, const std::vector<mpq_class> &p) {
    check_dim(dil, p.size());
    std::vector<mpq_class> out(dil.shell_size);
    for (size_t i = 0; i < dil.dim(); i++) {
        mpq_class part = p[i] / mpq_class(mpz_class((unsigned long)dil.block_size[i]));
        for (uint64_t s = 0; s < dil.block_size[i]; s++) {
            out[dil.block_offset[i] + s] = part;
        }
    }
    return out;
}

std::vector<mpq_class> permute_shell(const PermutationDilation &dil, const std::vector<mpq_class> &shell) {
    check_shell(dil, shell.size());
    std::vector<mpq_class> out(shell.size());
    for (uint64_t s = 0; s < dil.shell_size; s++) {
        out[dil.assignment[s]] = shell[s];
    }
    return out;
}

std::vector<mpq_class> invert_shell(const PermutationDilation &dil, const std::vector<mpq_class> &shell) {
    check_shell(dil, shell.size());
    std::vector<mpq_class> out(shell.size());
    for (uint64_t s = 0; s < dil.shell_size; s++) {
        out[s] = shell[dil.assignment[s]];
    }
    return out;
}

std::vector<mpq_class> block_marginal(const PermutationDilation &dil, const std::vector<mpq_class> &shell) {
    check_shell(dil, shell.size());
    std::vector<mpq_class> out(dil.dim(), mpq_class(0));
    for (size_t j = 0; j < dil.dim(); j++) {
        for (uint64_t s = 0; s < dil.block_size[j]; s++) {
            out[j] += shell[dil.block_offset[j] + s];
        }
    }
    return out;
}

std::vector<mpq_class> apply_dilation_exact(const PermutationDilation &dil, const std::vector<mpq_class> &p) {
    return block_marginal(dil, permute_shell(dil, shell_embed(dil, p)));
}

ProbVec apply_dilation(const PermutationDilation &dil, const ProbVec &p) {
    auto out = apply_dilation_exact(dil, exact_entries(p));
    std::vector<double> v;
    v.reserve(out.size());
    for (const auto &x : out) {
        v.push_back(x.get_d());
    }
    return ProbVec(std::move(v));
}

mpq_class exact_trace_distance(const std::vector<mpq_class> &a, const std::vector<mpq_class> &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("trace distance between different dimensions");
    }
    mpq_class total = 0;
    for (size_t i = 0; i < a.size(); i++) {
        total += abs(a[i] - b[i]);
    }
    return total / 2;
}

DilationErrors dilation_errors(
    const PermutationDilation &dil, const std::vector<mpq_class> &p, const std::vector<mpq_class> &q) {
    auto shell_out = permute_shell(dil, shell_embed(dil, p));
    return DilationErrors{
        exact_trace_distance(block_marginal(dil, shell_out), q),
        exact_trace_distance(shell_out, shell_embed(dil, q)),
    };
}

DilationVerification verify_dilation(
    const RationalChannel &ch, const PermutationDilation &dil, const std::vector<mpq_class> &p) {
    DilationVerification out;
    size_t d = dil.dim();

    out.counts_ok = d == ch.dim();
    for (size_t i = 0; out.counts_ok && i < d; i++) {
        uint64_t row = 0, col = 0;
        for (size_t j = 0; j < d; j++) {
            row += dil.counts[i][j];
            col += dil.counts[j][i];
        }
        out.counts_ok = row == dil.block_size[i] && col == dil.block_size[i];
    }
    // Slot-level check that block i really sends counts[i][j] slots into block j.
    if (out.counts_ok) {
        std::vector<std::vector<uint64_t>> seen(d, std::vector<uint64_t>(d, 0));
        for (uint64_t s = 0; s < dil.shell_size; s++) {
            seen[dil.block_of(s)][dil.block_of(dil.assignment[s])]++;
        }
        out.counts_ok = seen == dil.counts;
    }

    std::vector<bool> hit(dil.shell_size, false);
    out.bijection_ok = dil.assignment.size() == dil.shell_size;
    for (uint64_t s = 0; out.bijection_ok && s < dil.shell_size; s++) {
        uint64_t t = dil.assignment[s];
        out.bijection_ok = t < dil.shell_size && !hit[t];
        if (out.bijection_ok) {
            hit[t] = true;
        }
    }
    if (!out.bijection_ok) {
        return out;
    }

    out.output_ok = apply_dilation_exact(dil, p) == ch.apply(p);
    auto shell = shell_embed(dil, p);
    out.round_trip_ok = invert_shell(dil, permute_shell(dil, shell)) == shell;
    return out;
}

}  // namespace catlab
