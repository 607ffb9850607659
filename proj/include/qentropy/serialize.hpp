// Copyright 2026 The qentropy Authors
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

// JSON forms of channels, matrices, check reports and search records.
// Complex numbers are [re, im] pairs; matrices are row-major nested arrays.
// Doubles are written with round-trip precision.

#ifndef QENTROPY_SERIALIZE_HPP
#define QENTROPY_SERIALIZE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qentropy/channel.hpp"
#include "qentropy/search.hpp"
#include "qentropy/verify.hpp"

namespace qent {

using Json = nlohmann::ordered_json;

/// Parses text, reporting syntax errors as ParseError with line and column.
Json parse_json(const std::string& text, const std::string& source = "input");
Json read_json(std::istream& in, const std::string& source = "input");

Json complex_to_json(Complex z);
/// Accepts [re, im] or a bare number.
Complex complex_from_json(const Json& j, const std::string& path);

Json matrix_to_json(const CMat& m);
CMat matrix_from_json(const Json& j, const std::string& path = "matrix");

/// {dim_in, dim_out, kraus, flags, seed?, family?}.
Json channel_to_json(const Channel& c);
/// Validates shapes against dim_in/dim_out; field errors name the JSON path.
Channel channel_from_json(const Json& j);
Channel read_channel(std::istream& in, const std::string& source = "input");

Json report_to_json(const CheckReport& r);
Json reports_to_json(const std::vector<CheckReport>& reports);

Json mixture_to_json(const MixtureParams& m);
MixtureParams mixture_from_json(const Json& j, const std::string& path);

Json record_to_json(const SlackRecord& r);
SlackRecord record_from_json(const Json& j);
/// One record per line.
void write_records(std::ostream& out, const std::vector<SlackRecord>& records);
std::vector<SlackRecord> read_records(std::istream& in, const std::string& source = "input");

Json saturation_to_json(const SaturationReport& r);

}  // namespace qent

#endif  // QENTROPY_SERIALIZE_HPP
