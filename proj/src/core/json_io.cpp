// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/json_io.hpp"

#include <cmath>

#include "core/error.hpp"

namespace secamp {

namespace {

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
  fail(ErrorCode::parse, "field " + field + ": " + what);
}

const Json& member(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) schema_error(path.empty() ? "/" : path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) schema_error(path + "/" + key, "missing");
  return *it;
}

std::vector<double> numbers(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of numbers");
  if (j.empty()) schema_error(path, "must not be empty");
  require(j.size() <= kDefaultCellLimit, path + ": array exceeds the cell limit",
          ErrorCode::size_limit);
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& v = j[i];
    const std::string at = path + "/" + std::to_string(i);
    if (!v.is_number()) schema_error(at, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x) || x < 0.0) schema_error(at, "must be a finite nonnegative number");
    out.push_back(x);
  }
  return out;
}

// Row-major matrix; returns the row count through `rows`.
std::vector<double> matrix(const Json& j, const std::string& path,
                           std::size_t& rows, std::size_t& cols) {
  if (!j.is_array() || j.empty()) schema_error(path, "expected a nonempty array of rows");
  rows = j.size();
  cols = 0;
  std::vector<double> out;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string at = path + "/" + std::to_string(r);
    const auto row = numbers(j[r], at);
    if (r == 0) cols = row.size();
    else if (row.size() != cols) schema_error(at, "rows must have equal length");
    require(out.size() + row.size() <= kDefaultCellLimit,
            path + ": matrix exceeds the cell limit", ErrorCode::size_limit);
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

std::vector<std::string> labels(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string())
      schema_error(path + "/" + std::to_string(i), "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

Alphabet alphabet_or_indexed(const Json& j, const char* key, std::size_t n) {
  const auto it = j.find(key);
  if (it == j.end()) return Alphabet::indexed(n);
  const std::string path = std::string("/") + key;
  auto syms = labels(*it, path);
  if (syms.size() != n) schema_error(path, "length must be " + std::to_string(n));
  try {
    return Alphabet(std::move(syms));
  } catch (const Error& e) {
    schema_error(path, e.what());
  }
}

// Rethrows model validation failures as schema errors on `field`.
template <typename F>
auto checked(const std::string& field, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::invalid_argument) schema_error(field, e.what());
    throw;
  }
}

AdditiveGroup group_from(const Json& j, const std::string& path) {
  const Json& m = member(j, path, "moduli");
  if (!m.is_array() || m.empty()) schema_error(path + "/moduli", "expected a nonempty array");
  std::vector<unsigned> moduli;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i].is_number_unsigned() || m[i].get<std::uint64_t>() < 1 ||
        m[i].get<std::uint64_t>() > kDefaultCellLimit)
      schema_error(path + "/moduli/" + std::to_string(i), "expected a positive integer");
    moduli.push_back(m[i].get<unsigned>());
  }
  return checked(path + "/moduli", [&] { return AdditiveGroup(moduli); });
}

Json rows_of(std::span<const double> m, std::size_t cols) {
  Json out = Json::array();
  for (std::size_t r = 0; r * cols < m.size(); ++r)
    out.push_back(std::vector<double>(m.begin() + r * cols, m.begin() + (r + 1) * cols));
  return out;
}

}  // namespace

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // Byte offsets are 1-based and point just past the offending character.
    const std::size_t at = e.byte == 0 ? 0 : std::min(e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    const auto colon = msg.find(": ", msg.find("parse error"));
    if (colon != std::string::npos) msg = msg.substr(colon + 2);
    fail(ErrorCode::parse, std::string(source) + ":" + std::to_string(line) + ":" +
                               std::to_string(col) + ": " + msg);
  }
}

SubDist dist_from_json(const Json& j) {
  auto mass = numbers(member(j, "", "mass"), "/mass");
  Alphabet a = alphabet_or_indexed(j, "symbols", mass.size());
  return checked("/mass", [&] { return SubDist(std::move(a), std::move(mass)); });
}

JointDist joint_from_json(const Json& j) {
  std::size_t rows = 0, cols = 0;
  auto m = matrix(member(j, "", "mass"), "/mass", rows, cols);
  Alphabet a = alphabet_or_indexed(j, "symbols_a", rows);
  Alphabet e = alphabet_or_indexed(j, "symbols_e", cols);
  return checked("/mass", [&] { return JointDist(std::move(a), std::move(e), std::move(m)); });
}

Channel channel_from_json(const Json& j) {
  if (!j.is_object()) schema_error("/", "expected an object");
  const int forms = static_cast<int>(j.contains("matrix")) + j.contains("additive") +
                    j.contains("general_additive");
  if (forms != 1)
    schema_error("/", "exactly one of matrix, additive, general_additive is required");
  if (j.contains("additive")) {
    const Json& a = j["additive"];
    const AdditiveGroup g = group_from(a, "/additive");
    const SubDist noise = checked("/additive/noise", [&] {
      return SubDist(numbers(member(a, "/additive", "noise"), "/additive/noise"));
    });
    return checked("/additive", [&] { return Channel::additive(g, noise); });
  }
  if (j.contains("general_additive")) {
    const Json& a = j["general_additive"];
    const AdditiveGroup g = group_from(a, "/general_additive");
    std::size_t rows = 0, cols = 0;
    auto m = matrix(member(a, "/general_additive", "joint"), "/general_additive/joint",
                    rows, cols);
    const JointDist pxz =
        checked("/general_additive/joint", [&] { return JointDist(rows, cols, std::move(m)); });
    return checked("/general_additive", [&] { return Channel::general_additive(g, pxz); });
  }
  std::size_t rows = 0, cols = 0;
  auto m = matrix(j["matrix"], "/matrix", rows, cols);
  Alphabet in = alphabet_or_indexed(j, "inputs", rows);
  Alphabet out = alphabet_or_indexed(j, "outputs", cols);
  return checked("/matrix", [&] { return Channel(std::move(in), std::move(out), std::move(m)); });
}

Json to_json(const SubDist& p) {
  return Json{{"mass", std::vector<double>(p.mass().begin(), p.mass().end())},
              {"symbols", p.alphabet().symbols()}};
}

Json to_json(const JointDist& j) {
  return Json{{"mass", rows_of(j.mass(), j.size_e())},
              {"symbols_a", j.alphabet_a().symbols()},
              {"symbols_e", j.alphabet_e().symbols()}};
}

Json to_json(const Channel& w) {
  if (w.kind() == Channel::Kind::additive)
    return Json{{"additive", {{"moduli", w.group()->moduli()},
                              {"noise", std::vector<double>(w.noise()->mass().begin(),
                                                            w.noise()->mass().end())}}}};
  if (w.kind() == Channel::Kind::general_additive)
    return Json{{"general_additive",
                 {{"moduli", w.group()->moduli()},
                  {"joint", rows_of(w.side_joint()->mass(), w.side_joint()->size_e())}}}};
  std::vector<double> m;
  for (std::size_t x = 0; x < w.inputs(); ++x)
    m.insert(m.end(), w.row(x).begin(), w.row(x).end());
  return Json{{"matrix", rows_of(m, w.outputs())},
              {"inputs", w.input().symbols()},
              {"outputs", w.output().symbols()}};
}

Json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace secamp
