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


#include "table.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace catlab {

std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void Table::add(std::vector<std::string> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error(
            "row has " + std::to_string(row.size()) + " cells for " + std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

std::string Table::csv() const {
    std::string out;
    auto line = [&out](const std::vector<std::string> &cells) {
        for (size_t i = 0; i < cells.size(); i++) {
            if (i) {
                out += ',';
            }
            out += cells[i];
        }
        out += '\n';
    };
    line(columns);
    for (const auto &r : rows) {
        line(r);
    }
    return out;
}

size_t Table::column(const std::string &name) const {
    for (size_t i = 0; i < columns.size(); i++) {
        if (columns[i] == name) {
            return i;
        }
    }
    throw std::out_of_range("no column named '" + name + "'");
}

const std::string &Table::at(size_t row, const std::string &name) const {
    return rows.at(row).at(column(name));
}

double Table::number(size_t row, const std::string &name) const {
    return std::stod(at(row, name));
}

std::string digest_hex(const std::string &bytes) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

std::string digest_hex(const std::vector<double> &values) {
    std::string bytes(values.size() * sizeof(double), '\0');
    if (!values.empty()) {
        std::memcpy(bytes.data(), values.data(), bytes.size());
    }
    return digest_hex(bytes);
}

}  // namespace catlab
