#include "idealkit/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace idealkit {

namespace {

// Largest integer magnitude exactly representable downstream (2^53).
const Z kSafeInt = Z(1) << 53;

}  // namespace

json json_integer(const Z& z) {
  if (abs(z) <= kSafeInt) return static_cast<long>(z.get_si());
  return z.get_str();
}

json json_rational(const Q& q) {
  Q c = q;
  c.canonicalize();
  if (c.get_den() == 1) return json_integer(Z(c.get_num()));
  return c.get_str();
}

std::string canonical_json(const json& j) { return j.dump(2) + "\n"; }

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::string out;
  for (size_t i = 0; i < header.size(); ++i)
    out += (i ? "," : "") + quote(header[i]);
  out += "\n";
  for (auto& row : rows) {
    if (row.size() != header.size())
      throw std::invalid_argument("csv row width mismatch");
    for (size_t i = 0; i < row.size(); ++i)
      out += (i ? "," : "") + quote(row[i]);
    out += "\n";
  }
  return out;
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed for " + path);
}

}  // namespace idealkit
