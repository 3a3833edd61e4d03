/*
 *  Copyright 2026 The radford-hopf Authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */
#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "radford/cli.hpp"

namespace radford::testing {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

inline CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

inline std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "radford-tests";
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string write_file(const std::string& name, const std::string& text) {
  auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path.string();
}

/// Runs the shipped validator on `document` against one schema definition.
inline bool validates(const std::string& definition, const std::string& document) {
  static int counter = 0;
  std::string path = write_file("doc" + std::to_string(counter++) + ".json", document);
  std::string cmd = std::string(RADFORD_PYTHON) + " " + RADFORD_VALIDATOR + " " + RADFORD_SCHEMA +
                    " " + definition + " " + path;
  return std::system(cmd.c_str()) == 0;
}

}  // namespace radford::testing
