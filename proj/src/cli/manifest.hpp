/**
 * Copyright 2026 The aqnn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "aqnn/serialize.hpp"

namespace aqnn::cli {

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

/// Records every file a command writes so the run manifest can list
/// output digests.
class RunManifest {
 public:
  RunManifest(std::string command, Json parameters, std::uint64_t master_seed);

  void write_output(const std::filesystem::path& path, const std::string& text);
  void set(const std::string& key, Json value) { extra_[key] = std::move(value); }

  Json finish() const;

 private:
  std::string command_;
  Json parameters_;
  std::uint64_t master_seed_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::pair<std::string, std::string>> outputs_;
  Json extra_ = Json::object();
};

}  // namespace aqnn::cli
