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

#include "secsel/dataset_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "secsel/error.hpp"

namespace secsel {
namespace fs = std::filesystem;
namespace {

[[noreturn]] void io_error(const std::string& message) { throw Error(ErrorCode::kIo, message); }

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

double parse_double(const std::string& text, const fs::path& path, std::size_t line) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  while (first < last && *first == ' ') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr == first) {
    io_error(path.string() + ":" + std::to_string(line) + ": bad number '" + text + "'");
  }
  return value;
}

}  // namespace

void write_csv(const fs::path& path, const Matrix& m, const std::vector<std::string>& header) {
  require(header.size() == static_cast<std::size_t>(m.cols()), "CSV header width mismatch");
  std::ofstream out(path);
  if (!out) io_error("cannot write " + path.string());
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
  out << '\n';
  char buf[32];
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index c = 0; c < m.cols(); ++c) {
      // Shortest round-trip representation.
      auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), m(i, c));
      (void)ec;
      if (c) out << ',';
      out.write(buf, end - buf);
    }
    out << '\n';
  }
  if (!out) io_error("failed writing " + path.string());
}

void write_csv(const fs::path& path, const Matrix& m, const std::string& prefix) {
  std::vector<std::string> header;
  for (Index c = 0; c < m.cols(); ++c) header.push_back(prefix + std::to_string(c));
  write_csv(path, m, header);
}

Matrix read_csv(const fs::path& path, std::vector<std::string>* header) {
  std::ifstream in(path);
  if (!in) io_error("cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line)) io_error(path.string() + ": missing header row");
  line = strip_cr(line);
  const std::vector<std::string> names = line.empty() ? std::vector<std::string>{} : split(line);
  if (header) *header = names;
  std::vector<std::vector<double>> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    const std::vector<std::string> fields = split(line);
    if (fields.size() != names.size()) {
      io_error(path.string() + ":" + std::to_string(lineno) + ": expected " +
               std::to_string(names.size()) + " fields");
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const std::string& f : fields) row.push_back(parse_double(f, path, lineno));
    rows.push_back(std::move(row));
  }
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(names.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < names.size(); ++c) m(i, c) = rows[i][c];
  return m;
}

void write_dataset(const DataSet& ds, const fs::path& dir) {
  validate(ds, false);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) io_error("cannot create " + dir.string() + ": " + ec.message());

  write_csv(dir / "points.csv", ds.points, "x");
  write_csv(dir / "targets.csv", ds.targets, "g");
  nlohmann::json manifest = nlohmann::json::array();
  for (std::size_t j = 0; j < ds.sensors.size(); ++j) {
    char file[32];
    std::snprintf(file, sizeof(file), "sensor_%03zu.csv", j);
    const SensorGroup& s = ds.sensors[j];
    write_csv(dir / file, s.values, "m" + std::to_string(s.id) + "_");
    manifest.push_back({{"id", s.id}, {"dim", s.dim()}, {"file", file}});
  }
  std::ofstream(dir / "sensors.json") << manifest.dump(2) << '\n';
  if (ds.latent.size() > 0) write_csv(dir / "latent.csv", ds.latent, ds.latent_names);
  std::ofstream(dir / "name.txt") << ds.name << '\n';
}

DataSet read_dataset(const fs::path& dir) {
  if (!fs::is_directory(dir)) io_error("not a data set directory: " + dir.string());
  DataSet ds;
  ds.points = read_csv(dir / "points.csv");
  ds.targets = read_csv(dir / "targets.csv");
  if (ds.targets.rows() == 0) ds.targets.resize(ds.points.rows(), 0);

  std::ifstream mf(dir / "sensors.json");
  if (!mf) io_error("missing sensors.json in " + dir.string());
  nlohmann::json manifest;
  try {
    mf >> manifest;
  } catch (const nlohmann::json::exception& e) {
    io_error("sensors.json: " + std::string(e.what()));
  }
  if (!manifest.is_array()) io_error("sensors.json must be an array");
  for (const auto& entry : manifest) {
    SensorGroup s;
    s.id = entry.at("id").get<int>();
    s.values = read_csv(dir / entry.at("file").get<std::string>());
    if (s.dim() != entry.at("dim").get<Index>()) {
      io_error("sensor " + std::to_string(s.id) + ": dim does not match its CSV");
    }
    ds.sensors.push_back(std::move(s));
  }
  if (fs::exists(dir / "latent.csv")) ds.latent = read_csv(dir / "latent.csv", &ds.latent_names);
  if (std::ifstream nf(dir / "name.txt"); nf) std::getline(nf, ds.name);
  validate(ds, false);
  return ds;
}

}  // namespace secsel
