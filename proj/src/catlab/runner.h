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


#ifndef CATLAB_RUNNER_H
#define CATLAB_RUNNER_H

#include <filesystem>
#include <string>

#include "experiments.h"
#include "io.h"

namespace catlab {

/// Digest of the canonical config JSON, recorded in every summary.
std::string config_digest(const ExperimentConfig &cfg);

/// Summary document for a finished run. Contains no wall-clock data, so reruns match byte for byte.
json summary_json(const ExperimentConfig &cfg, const ExperimentResult &res);

/// Runs the experiment and writes its tables, summary.json and timing.json under out_dir.
///
/// summary.json is written first with "complete": false and rewritten on success. Tables go
/// through a ".partial" name and are renamed once fully written, so an interrupted run leaves
/// only files that are visibly incomplete. Wall time goes to timing.json alone.
json run_to_directory(const ExperimentConfig &cfg, const std::filesystem::path &out_dir);

}  // namespace catlab

#endif
