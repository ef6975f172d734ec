// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SECSEL_DATASET_IO_HPP_
#define SECSEL_DATASET_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "secsel/dataset.hpp"

namespace secsel {

// Comma-separated, '.'-decimal, one header row.
void write_csv(const std::filesystem::path& path, const Matrix& m,
               const std::vector<std::string>& header);
void write_csv(const std::filesystem::path& path, const Matrix& m, const std::string& prefix);
Matrix read_csv(const std::filesystem::path& path, std::vector<std::string>* header = nullptr);

/// Directory layout: points.csv, targets.csv, sensors.json (array of
/// {"id", "dim", "file"}), one sensor_NNN.csv per group, and an optional
/// latent.csv with generator parameters.
void write_dataset(const DataSet& ds, const std::filesystem::path& dir);
DataSet read_dataset(const std::filesystem::path& dir);

}  // namespace secsel

#endif  // SECSEL_DATASET_IO_HPP_
