// Copyright 2026 The Barrier Coverage Authors
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

// Text formats. Instance files:
//
//   # optional comment lines
//   L <rational>
//   N <count>
//   <x> <r>        (N lines, any order; the loader sorts)
//
// Solution files: "COST <rational>" then one centre per sensor, aligned with
// the sorted instance. Rationals are "p", "p/q" or decimals on input and
// always lowest-terms "p"/"p/q" on output.

#ifndef BARRIER_IO_HPP_
#define BARRIER_IO_HPP_

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "barrier/errors.hpp"
#include "barrier/model.hpp"
#include "barrier/rational.hpp"

namespace barrier {

struct SolutionFile {
  Rational cost;
  Solution solution;
};

namespace internal {

// Non-blank, non-comment lines split on whitespace, with 1-based line numbers.
struct Line {
  size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream words(raw);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    lines.push_back({number, std::move(tokens)});
  }
  return lines;
}

inline Rational ParseAt(const Line& line, size_t index) {
  try {
    return Rational::Parse(line.tokens[index]);
  } catch (const Error& e) {
    throw ParseError("line " + std::to_string(line.number) + ": " + e.what());
  }
}

inline void Expect(const Line& line, std::string_view keyword, size_t count) {
  if (line.tokens.size() != count || (!keyword.empty() && line.tokens[0] != keyword)) {
    throw ParseError("line " + std::to_string(line.number) + ": expected " +
                     (keyword.empty() ? std::to_string(count) + " values"
                                      : "'" + std::string(keyword) + " <value>'"));
  }
}

}  // namespace internal

inline std::string FormatInstance(const Instance& instance,
                                  const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "# " << c << '\n';
  out << "L " << instance.length() << '\n' << "N " << instance.size() << '\n';
  for (const Sensor& s : instance.sensors()) out << s.x << ' ' << s.r << '\n';
  return out.str();
}

inline Instance ParseInstance(std::string_view text) {
  const auto lines = internal::Tokenize(text);
  if (lines.size() < 2) throw ParseError("instance needs 'L' and 'N' lines");
  internal::Expect(lines[0], "L", 2);
  internal::Expect(lines[1], "N", 2);
  const Rational length = internal::ParseAt(lines[0], 1);
  const Rational count = internal::ParseAt(lines[1], 1);
  if (!count.is_integer() || count < 0) {
    throw ParseError("line " + std::to_string(lines[1].number) + ": bad sensor count");
  }
  if (lines.size() != static_cast<size_t>(count.num()) + 2) {
    throw ParseError("expected " + count.ToString() + " sensor lines, found " +
                     std::to_string(lines.size() - 2));
  }
  std::vector<Sensor> sensors;
  for (size_t i = 2; i < lines.size(); ++i) {
    internal::Expect(lines[i], "", 2);
    sensors.push_back({internal::ParseAt(lines[i], 0), internal::ParseAt(lines[i], 1)});
  }
  try {
    return Instance(length, std::move(sensors));
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
}

inline std::string FormatSolution(const Instance& instance, const Solution& solution) {
  std::ostringstream out;
  out << "COST " << Cost(instance, solution) << '\n';
  for (const Rational& y : solution.y) out << y << '\n';
  return out.str();
}

inline SolutionFile ParseSolution(std::string_view text) {
  const auto lines = internal::Tokenize(text);
  if (lines.empty()) throw ParseError("solution needs a 'COST' line");
  internal::Expect(lines[0], "COST", 2);
  SolutionFile out;
  out.cost = internal::ParseAt(lines[0], 1);
  for (size_t i = 1; i < lines.size(); ++i) {
    internal::Expect(lines[i], "", 1);
    out.solution.y.push_back(internal::ParseAt(lines[i], 0));
  }
  return out;
}

inline std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void WriteTextFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write '" + path + "'");
  out << text;
  if (!out) throw PreconditionError("failed writing '" + path + "'");
}

}  // namespace barrier

#endif  // BARRIER_IO_HPP_
