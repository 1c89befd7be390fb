// Copyright 2026 The pqca Authors
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

// Text formats. Every parser reports errors as ErrorCode::Parse with the
// offending line number.

#ifndef PQCA_IO_HPP
#define PQCA_IO_HPP

#include <map>
#include <string>
#include <vector>

#include "pqca/lattice.hpp"

namespace pqca {

// Shortest decimal that reads back to the same double.
std::string format_double(double v);

Polymer parse_polymer(const std::string &text);
std::string serialize_polymer(const Polymer &p);

PulseSequence parse_sequence(const std::string &text);
std::string serialize_sequence(const PulseSequence &seq);
std::string serialize_pulse(const Pulse &p);

FrequencyTable parse_frequency_table(const std::string &text);
std::string serialize_frequency_table(const FrequencyTable &t);

// Plain key=value lines, '#' comments.
std::map<std::string, std::string> parse_key_values(const std::string &text);

std::string read_file(const std::string &path);

namespace detail {
std::vector<std::string> split_ws(const std::string &line);
std::string strip_comment(const std::string &line);
double parse_double(const std::string &s, size_t line);
long parse_long(const std::string &s, size_t line);
[[noreturn]] void parse_fail(size_t line, const std::string &what);
}  // namespace detail

}  // namespace pqca

#endif
