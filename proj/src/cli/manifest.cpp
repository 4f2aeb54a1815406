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

#include "manifest.hpp"

#include <array>
#include <cstdio>

#include <openssl/evp.h>

#include "aqnn/error.hpp"
#include "aqnn/version.hpp"

namespace aqnn::cli {

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

RunManifest::RunManifest(std::string command, Json parameters, std::uint64_t master_seed)
    : command_(std::move(command)),
      parameters_(std::move(parameters)),
      master_seed_(master_seed),
      start_(std::chrono::steady_clock::now()) {}

void RunManifest::write_output(const std::filesystem::path& path, const std::string& text) {
  write_text_file(path, text);
  outputs_.emplace_back(path.string(), sha256_hex(text));
}

Json RunManifest::finish() const {
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
  Json outputs = Json::object();
  for (const auto& [path, digest] : outputs_) {
    outputs[path] = "sha256:" + digest;
  }
  Json j{{"command", command_},
         {"parameters", parameters_},
         {"master_seed", master_seed_},
         {"tool_version", kVersion},
         {"duration_seconds", elapsed.count()},
         {"outputs", std::move(outputs)}};
  for (const auto& [key, value] : extra_.items()) {
    j[key] = value;
  }
  return j;
}

}  // namespace aqnn::cli
