// Copyright 2026 The steanesim Authors
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

#ifndef STEANESIM_REPORT_H
#define STEANESIM_REPORT_H

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "steanesim/experiment.h"

namespace steanesim {

enum class OutputFormat : std::uint8_t { kCsv, kJson };

OutputFormat parse_output_format(std::string_view name);

/// Shortest decimal text that reads back to the same double.
std::string format_number(double value);

std::string csv_header();
std::string csv_row(const SweepRow& row);
/// One JSON object (no trailing newline) with the CSV fields as keys.
std::string json_row(const SweepRow& row);

/// Writes every row; CSV output starts with the header line.
void write_rows(std::ostream& out, const std::vector<SweepRow>& rows, OutputFormat format);

}  // namespace steanesim

#endif
