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


#include "runner.h"

#include <chrono>
#include <fstream>
#include <stdexcept>

#include "parallel.h"
#include "version.h"

namespace catlab {

namespace {

void write_file(const std::filesystem::path &path, const std::string &bytes) {
    std::filesystem::path tmp = path;
    tmp += ".partial";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write '" + tmp.string() + "'");
        }
        out << bytes;
        out.flush();
        if (!out) {
            throw std::runtime_error("write to '" + tmp.string() + "' failed");
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

std::string config_digest(const ExperimentConfig &cfg) {
    return digest_hex(config_json(cfg).dump());
}

json summary_json(const ExperimentConfig &cfg, const ExperimentResult &res) {
    json rows = json::object();
    std::vector<std::string> files;
    for (const auto &[name, table] : res.tables) {
        rows[name] = table.rows.size();
        files.push_back(name);
    }
    return json{
        {"experiment", cfg.experiment},
        {"version", kVersion},
        {"config_digest", config_digest(cfg)},
        {"config", config_json(cfg)},
        {"complete", true},
        {"files", files},
        {"rows", rows},
        {"cap_breaches", res.cap_breaches},
        {"grid_sensitive", res.grid_sensitive},
        {"warnings", res.warnings},
    };
}

json run_to_directory(const ExperimentConfig &cfg, const std::filesystem::path &out_dir) {
    cfg.validate();
    std::filesystem::create_directories(out_dir);
    json pending{
        {"experiment", cfg.experiment},
        {"version", kVersion},
        {"config_digest", config_digest(cfg)},
        {"config", config_json(cfg)},
        {"complete", false},
    };
    write_file(out_dir / "summary.json", pending.dump(2) + "\n");

    auto start = std::chrono::steady_clock::now();
    ExperimentResult res;
    try {
        res = run_experiment(cfg);
        for (const auto &[name, table] : res.tables) {
            write_file(out_dir / name, table.csv());
        }
    } catch (const std::exception &e) {
        pending["error"] = e.what();
        write_file(out_dir / "summary.json", pending.dump(2) + "\n");
        throw;
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    json summary = summary_json(cfg, res);
    write_file(out_dir / "summary.json", summary.dump(2) + "\n");
    json timing{{"wall_seconds", seconds}, {"threads", worker_count()}};
    write_file(out_dir / "timing.json", timing.dump(2) + "\n");
    return summary;
}

}  // namespace catlab
