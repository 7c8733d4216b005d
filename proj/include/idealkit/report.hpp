/*
 * report.hpp
 * ----------
 * Canonical serialization: JSON with sorted keys and exact rationals as
 * "p/q" strings, CSV tables, and atomic file writes (temp + rename) so
 * reruns are byte-identical and never leave partial output.
 */
#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "idealkit/field.hpp"

namespace idealkit {

using json = nlohmann::json;

// Exact rational as a JSON value: integer when it fits safely in a
// double-exact range, decimal string otherwise, "p/q" when fractional.
json json_rational(const Q& q);
json json_integer(const Z& z);
inline json json_integer(long v) { return json_integer(Z(v)); }

// dump(2) with a trailing newline; nlohmann objects already iterate in
// sorted key order.
std::string canonical_json(const json& j);

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);

// Write via temp file in the same directory, then rename.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace idealkit
