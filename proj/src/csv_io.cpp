// Copyright 2026 The hedgelab Authors.
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

#include "hedgelab/csv_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "hedgelab/errors.hpp"

namespace hedgelab {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double ParseReal(std::string_view field, long line) {
  field = Trim(field);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError("malformed number '" + std::string(field) + "'", line);
  }
  return v;
}

long long ParseInteger(std::string_view field, long line) {
  field = Trim(field);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError("malformed integer '" + std::string(field) + "'", line);
  }
  return v;
}

// Yields (line number, content) for every non-comment, non-blank line.
template <typename F>
void ForEachDataLine(std::istream& in, F&& f) {
  std::string text;
  long line = 0;
  while (std::getline(in, text)) {
    ++line;
    const std::string_view s = Trim(text);
    if (s.empty() || s.front() == '#') continue;
    f(line, s);
  }
}

void CheckRoundIndex(std::string_view field, std::size_t expected, long line) {
  const long long t = ParseInteger(field, line);
  if (t != static_cast<long long>(expected)) {
    throw ParseError("expected round " + std::to_string(expected) + ", found " +
                         std::to_string(t),
                     line);
  }
}

std::ifstream OpenForRead(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream OpenForWrite(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

std::string FormatDouble(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::vector<std::string_view> SplitCsvLine(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::vector<LossVector> ReadLosses(std::istream& in, double h_bound) {
  std::vector<LossVector> losses;
  std::size_t num_experts = 0;
  bool header_seen = false;
  ForEachDataLine(in, [&](long line, std::string_view s) {
    const auto fields = SplitCsvLine(s);
    if (!header_seen) {
      if (fields.size() < 2 || Trim(fields[0]) != "t") {
        throw ParseError("expected header 't,l1,...,lN'", line);
      }
      for (std::size_t n = 1; n < fields.size(); ++n) {
        if (Trim(fields[n]) != "l" + std::to_string(n)) {
          throw ParseError("header column " + std::to_string(n + 1) +
                               " must be 'l" + std::to_string(n) + "'",
                           line);
        }
      }
      num_experts = fields.size() - 1;
      header_seen = true;
      return;
    }
    if (fields.size() != num_experts + 1) {
      throw ParseError("row has " + std::to_string(fields.size() - 1) +
                           " losses, expected " + std::to_string(num_experts),
                       line);
    }
    CheckRoundIndex(fields[0], losses.size() + 1, line);
    std::vector<double> row(num_experts);
    for (std::size_t n = 0; n < num_experts; ++n) {
      row[n] = ParseReal(fields[n + 1], line);
      if (!(row[n] >= 0.0 && row[n] <= h_bound)) {
        throw ParseError("loss " + std::string(Trim(fields[n + 1])) +
                             " outside [0, " + FormatDouble(h_bound) + "]",
                         line);
      }
    }
    losses.emplace_back(std::move(row));
  });
  if (losses.empty()) throw ParseError("horizon zero", 0);
  return losses;
}

std::vector<LossVector> LoadLosses(const std::string& path, double h_bound) {
  auto in = OpenForRead(path);
  return ReadLosses(in, h_bound);
}

DelaySchedule ReadDelays(std::istream& in, const WarningSink& warn) {
  std::vector<std::int64_t> raw;
  bool header_seen = false;
  ForEachDataLine(in, [&](long line, std::string_view s) {
    const auto fields = SplitCsvLine(s);
    if (!header_seen) {
      if (fields.size() != 2 || Trim(fields[0]) != "t" || Trim(fields[1]) != "D") {
        throw ParseError("expected header 't,D'", line);
      }
      header_seen = true;
      return;
    }
    if (fields.size() != 2) throw ParseError("expected 2 columns", line);
    CheckRoundIndex(fields[0], raw.size() + 1, line);
    const long long d = ParseInteger(fields[1], line);
    if (d < 0) throw ParseError("negative delay", line);
    raw.push_back(d);
  });
  if (raw.empty()) throw ParseError("horizon zero", 0);
  DelaySchedule schedule(raw);
  if (schedule.clamped_count() > 0 && warn) {
    warn("clamped " + std::to_string(schedule.clamped_count()) +
         " delays to t + D_t <= T");
  }
  return schedule;
}

DelaySchedule LoadDelays(const std::string& path, const WarningSink& warn) {
  auto in = OpenForRead(path);
  return ReadDelays(in, warn);
}

void WriteLosses(std::ostream& out, std::span<const LossVector> losses) {
  const std::size_t n = losses.empty() ? 0 : losses.front().size();
  out << 't';
  for (std::size_t i = 1; i <= n; ++i) out << ",l" << i;
  out << '\n';
  for (std::size_t t = 0; t < losses.size(); ++t) {
    out << t + 1;
    for (double l : losses[t].values()) out << ',' << FormatDouble(l);
    out << '\n';
  }
}

void SaveLosses(const std::string& path, std::span<const LossVector> losses) {
  auto out = OpenForWrite(path);
  WriteLosses(out, losses);
}

void WriteDelays(std::ostream& out, const DelaySchedule& delays) {
  out << "t,D\n";
  for (Round t = 1; t <= delays.horizon(); ++t) {
    out << t << ',' << delays.raw_delay(t) << '\n';
  }
}

void SaveDelays(const std::string& path, const DelaySchedule& delays) {
  auto out = OpenForWrite(path);
  WriteDelays(out, delays);
}

}  // namespace hedgelab
