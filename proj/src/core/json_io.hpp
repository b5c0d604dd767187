// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "core/channel.hpp"
#include "core/distribution.hpp"

namespace secamp {

using Json = nlohmann::json;

// Parses text, reporting syntax errors as ErrorCode::parse with the line and
// column of the offending byte.
Json parse_json(std::string_view text, std::string_view source = "input");

// Schemas:
//   distribution  {"mass": [..], "symbols": [..]?}
//   joint         {"mass": [[..], ..], "symbols_a": [..]?, "symbols_e": [..]?}
//                 rows are indexed by A, columns by E
//   channel       {"matrix": [[..], ..], "inputs": [..]?, "outputs": [..]?}
//                 or {"additive": {"moduli": [..], "noise": [..]}}
//                 or {"general_additive": {"moduli": [..], "joint": [[..], ..]}}
// Violations raise ErrorCode::parse naming the offending field.
SubDist dist_from_json(const Json& j);
JointDist joint_from_json(const Json& j);
Channel channel_from_json(const Json& j);

Json to_json(const SubDist& p);
Json to_json(const JointDist& j);
Json to_json(const Channel& w);

// Non-finite values become the strings "inf", "-inf" and "nan".
Json number(double v);

// Sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace secamp
