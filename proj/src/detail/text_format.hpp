// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef LOEWNER_DETAIL_TEXT_FORMAT_HPP
#define LOEWNER_DETAIL_TEXT_FORMAT_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace loewner::detail {

// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

// Strict parsers; `context` names the offending location in the ParseError.
double parse_double_strict(std::string_view text, const std::string& context);
long long parse_int_strict(std::string_view text, const std::string& context);

std::vector<std::string_view> split_fields(std::string_view line, char sep);

// Whole-file text IO. Writes go to "<path>.tmp" followed by a rename, so a
// reader never observes a half-written file.
std::string read_text_file(const std::filesystem::path& path);
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace loewner::detail

#endif  // LOEWNER_DETAIL_TEXT_FORMAT_HPP
