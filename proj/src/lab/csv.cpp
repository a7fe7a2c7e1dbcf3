#include "calab/lab/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ios>
#include <system_error>

#include "calab/error.hpp"

namespace calab::lab {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_number(long long v) { return std::to_string(v); }
std::string format_number(std::size_t v) { return std::to_string(v); }
std::string format_bool(bool v) { return v ? "true" : "false"; }

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void append_row(std::string& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += quote(row[i]);
  }
  out += '\n';
}

}  // namespace

std::string to_csv(const Table& t) {
  std::string out;
  append_row(out, t.header);
  for (const auto& r : t.rows) {
    if (r.size() != t.header.size()) throw InvalidArgument("table " + t.name + ": ragged row");
    append_row(out, r);
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::ios_base::failure("cannot open " + tmp.string() + " for writing");
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    f.flush();
    if (!f) throw std::ios_base::failure("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::ios_base::failure("cannot rename into " + path.string());
  }
}

}  // namespace calab::lab
