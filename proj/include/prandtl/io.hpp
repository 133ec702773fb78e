#ifndef PRANDTL_IO_HPP
#define PRANDTL_IO_HPP

/// \file
///
/// Plain-text persistence: 17-significant-digit number formatting, numeric
/// CSV tables, and a run directory that is assembled in a temporary
/// location and renamed into place once complete.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "prandtl/errors.hpp"

namespace prandtl {

/// Round-trip exact decimal text for a double.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::size_t column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    throw ConfigError("csv: missing column '" + std::string(name) + "'");
  }
  std::vector<double> column_values(std::string_view name) const {
    const std::size_t c = column(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r[c]);
    return out;
  }
};

inline void write_csv(const std::filesystem::path& path, const CsvTable& t) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open " + path.string() + " for writing");
  for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << t.header[i];
  out << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << fmt17(r[i]);
    out << '\n';
  }
  if (!out) throw ConfigError("write failed: " + path.string());
}

inline CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty csv: " + path.string());
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) t.header.push_back(cell);
  }
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": not a number: '" + cell + "'");
      }
    }
    if (row.size() != t.header.size()) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected " +
                        std::to_string(t.header.size()) + " columns");
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

/// Report table whose first column is a text label.
struct LabeledRow {
  std::string label;
  std::vector<double> values;
};

inline void write_labeled_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
                              const std::vector<LabeledRow>& rows) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open " + path.string() + " for writing");
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& r : rows) {
    out << r.label;
    for (double v : r.values) out << ',' << fmt17(v);
    out << '\n';
  }
  if (!out) throw ConfigError("write failed: " + path.string());
}

/// Output directory written under "<final>.tmp" and renamed on commit().
/// An uncommitted directory is removed on destruction.
class StagedDirectory {
 public:
  explicit StagedDirectory(std::filesystem::path final_path)
      : final_(std::move(final_path)), staging_(final_.string() + ".tmp") {
    std::filesystem::remove_all(staging_);
    std::filesystem::create_directories(staging_);
  }
  StagedDirectory(const StagedDirectory&) = delete;
  StagedDirectory& operator=(const StagedDirectory&) = delete;
  ~StagedDirectory() {
    if (!committed_) {
      std::error_code ec;
      std::filesystem::remove_all(staging_, ec);
    }
  }

  std::filesystem::path path() const { return staging_; }
  std::filesystem::path operator/(const std::string& name) const { return staging_ / name; }
  const std::filesystem::path& final_path() const { return final_; }

  void commit() {
    std::filesystem::remove_all(final_);
    if (final_.has_parent_path()) std::filesystem::create_directories(final_.parent_path());
    std::filesystem::rename(staging_, final_);
    committed_ = true;
  }

 private:
  std::filesystem::path final_, staging_;
  bool committed_ = false;
};

/// Ordered key = value text file.
class Manifest {
 public:
  void set(std::string key, std::string value) {
    for (auto& kv : entries_) {
      if (kv.first == key) {
        kv.second = std::move(value);
        return;
      }
    }
    entries_.emplace_back(std::move(key), std::move(value));
  }
  void set(std::string key, double value) { set(std::move(key), fmt17(value)); }

  const std::string* get(std::string_view key) const {
    for (const auto& kv : entries_)
      if (kv.first == key) return &kv.second;
    return nullptr;
  }

  void write(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path.string());
    for (const auto& [k, v] : entries_) out << k << " = " << v << '\n';
  }

  static Manifest read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open manifest " + path.string());
    Manifest m;
    std::string line;
    while (std::getline(in, line)) {
      const auto eq = line.find(" = ");
      if (eq == std::string::npos) continue;
      m.set(line.substr(0, eq), line.substr(eq + 3));
    }
    return m;
  }

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// FNV-1a 64-bit digest of a file's bytes, as hex text.
inline std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "missing";
  std::uint64_t h = 1469598103934665603ULL;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace prandtl

#endif  // PRANDTL_IO_HPP
