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

#ifndef HEDGELAB_CSV_IO_HPP_
#define HEDGELAB_CSV_IO_HPP_

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hedgelab/types.hpp"

// Loss files:  header `t,l1,...,lN`, then one row per round 1..T.
// Delay files: header `t,D`, then one row per round 1..T.
// Lines starting with '#' are comments and blank lines are skipped.

namespace hedgelab {

// Shortest text that parses back to the same double.
std::string FormatDouble(double x);

using WarningSink = std::function<void(const std::string&)>;

// Throws ParseError naming the offending line; "horizon zero" for files with
// no data rows; BoundsViolation-worthy values are reported as ParseError too.
std::vector<LossVector> ReadLosses(std::istream& in, double h_bound);
std::vector<LossVector> LoadLosses(const std::string& path,
                                   double h_bound = 1.0);

// Delays beyond T - t are clamped; `warn` receives one message if any were.
DelaySchedule ReadDelays(std::istream& in, const WarningSink& warn = {});
DelaySchedule LoadDelays(const std::string& path, const WarningSink& warn = {});

void WriteLosses(std::ostream& out, std::span<const LossVector> losses);
void SaveLosses(const std::string& path, std::span<const LossVector> losses);
// Writes the raw (pre-clamp) delays.
void WriteDelays(std::ostream& out, const DelaySchedule& delays);
void SaveDelays(const std::string& path, const DelaySchedule& delays);

// Splits on commas without trimming.
std::vector<std::string_view> SplitCsvLine(std::string_view line);

}  // namespace hedgelab

#endif  // HEDGELAB_CSV_IO_HPP_
