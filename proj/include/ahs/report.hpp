#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ahs {

struct RunConfig {
  std::string series;
  std::optional<int> rank;
  /// "all", a node number, or "<N>dim" (every node with dim g_-1 = N).
  std::string node = "all";
  std::vector<std::string> checks;
  std::string exactness = "exact-rational";
  int jet_order = 8;
  std::uint64_t seed = 1;
  std::string format = "json";
  int parallel = 1;
  bool allow_slow = false;
  bool timing = false;

  bool wants(const std::string& check) const;
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct CertificateReport {
  std::string check;
  std::string name;
  std::string target;
  int target_dim = 0;
  int achieved_dim = 0;
  std::uint64_t generators_consumed = 0;
  std::vector<std::string> witnesses;
  std::map<std::string, std::string> details;
  bool pass = false;
  std::optional<double> seconds;

  friend bool operator==(const CertificateReport&, const CertificateReport&) = default;
};

struct Dims {
  int g = 0;
  int g_minus = 0;
  int g0 = 0;
  int g0ss = 0;
  std::vector<int> ideals;

  friend bool operator==(const Dims&, const Dims&) = default;
};

struct AlgebraReport {
  std::string series;
  int rank = 0;
  int node = 0;
  std::string row_g, row_g0, row_g_minus;
  int table_dim_g_minus = 0;
  bool in_table_range = true;
  Dims dims;
  std::vector<CertificateReport> certificates;
  bool pass = false;

  friend bool operator==(const AlgebraReport&, const AlgebraReport&) = default;
};

struct CatalogEntry {
  std::string series;
  int rank = 0;
  std::string rank_range;
  /// 0 when the algebra has no |1|-grading.
  int node = 0;
  std::string row_g, row_g0, row_g_minus;
  int dim_g_minus = 0;
  int table_dim_g_minus = 0;
  bool in_table_range = true;
  std::string note;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

struct Report {
  int schema_version = 1;
  std::string command;
  std::optional<RunConfig> config;
  std::vector<AlgebraReport> algebras;
  std::vector<CatalogEntry> catalog;
  bool pass = false;

  friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);
void to_json(nlohmann::json& j, const CertificateReport& c);
void from_json(const nlohmann::json& j, CertificateReport& c);
void to_json(nlohmann::json& j, const Dims& d);
void from_json(const nlohmann::json& j, Dims& d);
void to_json(nlohmann::json& j, const AlgebraReport& a);
void from_json(const nlohmann::json& j, AlgebraReport& a);
void to_json(nlohmann::json& j, const CatalogEntry& e);
void from_json(const nlohmann::json& j, CatalogEntry& e);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

std::string print_json(const Report& r);
Report parse_report(const std::string& text);
void print_text(std::ostream& out, const Report& r);

}  // namespace ahs
