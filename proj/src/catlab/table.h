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


#ifndef CATLAB_TABLE_H
#define CATLAB_TABLE_H

#include <cstdint>
#include <string>
#include <vector>

namespace catlab {

/// Shortest round-trip decimal form of x; "inf", "-inf" and "nan" for non-finite values.
std::string format_number(double x);

/// In-memory CSV table. Cells are plain tokens: no commas, quotes or newlines.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row);
    std::string csv() const;
    /// Index of a column, throwing std::out_of_range naming it when absent.
    size_t column(const std::string &name) const;
    const std::string &at(size_t row, const std::string &name) const;
    double number(size_t row, const std::string &name) const;
};

/// 64-bit FNV-1a digest, rendered as 16 hex digits.
std::string digest_hex(const std::string &bytes);
std::string digest_hex(const std::vector<double> &values);

}  // namespace catlab

#endif
