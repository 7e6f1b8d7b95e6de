#include "ahs/report.hpp"

#include <algorithm>
#include <iomanip>

namespace ahs {

using nlohmann::json;

bool RunConfig::wants(const std::string& check) const {
  return std::find(checks.begin(), checks.end(), check) != checks.end();
}

void to_json(json& j, const RunConfig& c) {
  j = json{{"series", c.series},         {"node", c.node},         {"checks", c.checks},
           {"exactness", c.exactness},   {"jet_order", c.jet_order}, {"seed", c.seed},
           {"format", c.format},         {"parallel", c.parallel}, {"allow_slow", c.allow_slow},
           {"timing", c.timing}};
  if (c.rank) j["rank"] = *c.rank;
}

void from_json(const json& j, RunConfig& c) {
  j.at("series").get_to(c.series);
  c.rank = j.contains("rank") ? std::optional<int>(j.at("rank").get<int>()) : std::nullopt;
  j.at("node").get_to(c.node);
  j.at("checks").get_to(c.checks);
  j.at("exactness").get_to(c.exactness);
  j.at("jet_order").get_to(c.jet_order);
  j.at("seed").get_to(c.seed);
  j.at("format").get_to(c.format);
  j.at("parallel").get_to(c.parallel);
  j.at("allow_slow").get_to(c.allow_slow);
  j.at("timing").get_to(c.timing);
}

void to_json(json& j, const CertificateReport& c) {
  j = json{{"check", c.check},
           {"name", c.name},
           {"target", c.target},
           {"target_dim", c.target_dim},
           {"achieved_dim", c.achieved_dim},
           {"generators_consumed", c.generators_consumed},
           {"witness_count", c.witnesses.size()},
           {"witnesses", c.witnesses},
           {"details", c.details},
           {"pass", c.pass}};
  if (c.seconds) j["seconds"] = *c.seconds;
}

void from_json(const json& j, CertificateReport& c) {
  j.at("check").get_to(c.check);
  j.at("name").get_to(c.name);
  j.at("target").get_to(c.target);
  j.at("target_dim").get_to(c.target_dim);
  j.at("achieved_dim").get_to(c.achieved_dim);
  j.at("generators_consumed").get_to(c.generators_consumed);
  j.at("witnesses").get_to(c.witnesses);
  j.at("details").get_to(c.details);
  j.at("pass").get_to(c.pass);
  c.seconds = j.contains("seconds") ? std::optional<double>(j.at("seconds").get<double>()) : std::nullopt;
}

void to_json(json& j, const Dims& d) {
  j = json{{"g", d.g}, {"g_minus", d.g_minus}, {"g0", d.g0}, {"g0ss", d.g0ss}, {"ideals", d.ideals}};
}

void from_json(const json& j, Dims& d) {
  j.at("g").get_to(d.g);
  j.at("g_minus").get_to(d.g_minus);
  j.at("g0").get_to(d.g0);
  j.at("g0ss").get_to(d.g0ss);
  j.at("ideals").get_to(d.ideals);
}

void to_json(json& j, const AlgebraReport& a) {
  j = json{{"series", a.series},
           {"rank", a.rank},
           {"node", a.node},
           {"row", {{"g", a.row_g}, {"g0", a.row_g0}, {"g_minus", a.row_g_minus}}},
           {"table_dim_g_minus", a.table_dim_g_minus},
           {"in_table_range", a.in_table_range},
           {"dims", a.dims},
           {"certificates", a.certificates},
           {"pass", a.pass}};
}

void from_json(const json& j, AlgebraReport& a) {
  j.at("series").get_to(a.series);
  j.at("rank").get_to(a.rank);
  j.at("node").get_to(a.node);
  j.at("row").at("g").get_to(a.row_g);
  j.at("row").at("g0").get_to(a.row_g0);
  j.at("row").at("g_minus").get_to(a.row_g_minus);
  j.at("table_dim_g_minus").get_to(a.table_dim_g_minus);
  j.at("in_table_range").get_to(a.in_table_range);
  j.at("dims").get_to(a.dims);
  j.at("certificates").get_to(a.certificates);
  j.at("pass").get_to(a.pass);
}

void to_json(json& j, const CatalogEntry& e) {
  j = json{{"series", e.series},
           {"rank", e.rank},
           {"rank_range", e.rank_range},
           {"node", e.node},
           {"row", {{"g", e.row_g}, {"g0", e.row_g0}, {"g_minus", e.row_g_minus}}},
           {"dim_g_minus", e.dim_g_minus},
           {"table_dim_g_minus", e.table_dim_g_minus},
           {"in_table_range", e.in_table_range},
           {"note", e.note}};
}

void from_json(const json& j, CatalogEntry& e) {
  j.at("series").get_to(e.series);
  j.at("rank").get_to(e.rank);
  j.at("rank_range").get_to(e.rank_range);
  j.at("node").get_to(e.node);
  j.at("row").at("g").get_to(e.row_g);
  j.at("row").at("g0").get_to(e.row_g0);
  j.at("row").at("g_minus").get_to(e.row_g_minus);
  j.at("dim_g_minus").get_to(e.dim_g_minus);
  j.at("table_dim_g_minus").get_to(e.table_dim_g_minus);
  j.at("in_table_range").get_to(e.in_table_range);
  j.at("note").get_to(e.note);
}

void to_json(json& j, const Report& r) {
  j = json{{"schema_version", r.schema_version}, {"command", r.command}, {"pass", r.pass}};
  if (r.config) j["config"] = *r.config;
  if (r.command == "list")
    j["catalog"] = r.catalog;
  else
    j["algebras"] = r.algebras;
}

void from_json(const json& j, Report& r) {
  j.at("schema_version").get_to(r.schema_version);
  j.at("command").get_to(r.command);
  j.at("pass").get_to(r.pass);
  r.config = j.contains("config") ? std::optional<RunConfig>(j.at("config").get<RunConfig>()) : std::nullopt;
  r.catalog = j.value("catalog", std::vector<CatalogEntry>{});
  r.algebras = j.value("algebras", std::vector<AlgebraReport>{});
}

std::string print_json(const Report& r) { return json(r).dump(2) + "\n"; }

Report parse_report(const std::string& text) { return json::parse(text).get<Report>(); }

void print_text(std::ostream& out, const Report& r) {
  if (r.command == "list") {
    for (const auto& e : r.catalog) {
      out << e.series;
      if (e.rank) out << " rank " << e.rank;
      if (e.rank_range.rfind("n ", 0) == 0) out << " (" << e.rank_range << ")";
      if (e.node == 0) {
        out << ": " << e.note << "\n";
        continue;
      }
      out << " node " << e.node << ": " << e.row_g << " / " << e.row_g0 << " / " << e.row_g_minus
          << "  dim g-1 = " << e.dim_g_minus;
      if (!e.in_table_range) out << "  [outside table range]";
      if (!e.note.empty()) out << "  " << e.note;
      out << "\n";
    }
    out << "catalog check: " << (r.pass ? "PASS" : "FAIL") << "\n";
    return;
  }
  for (const auto& a : r.algebras) {
    out << a.series << " rank " << a.rank << " node " << a.node << ": " << a.row_g << " / "
        << a.row_g0 << " / " << a.row_g_minus << "\n";
    out << "  dims g=" << a.dims.g << " g-1=" << a.dims.g_minus << " g0=" << a.dims.g0
        << " g0ss=" << a.dims.g0ss << " ideals=[";
    for (std::size_t i = 0; i < a.dims.ideals.size(); ++i) out << (i ? "," : "") << a.dims.ideals[i];
    out << "]\n";
    for (const auto& c : a.certificates) {
      out << "  " << std::left << std::setw(28) << c.name << (c.pass ? "PASS" : "FAIL") << "  "
          << c.achieved_dim << "/" << c.target_dim << " " << c.target;
      if (c.seconds) out << "  " << std::fixed << std::setprecision(3) << *c.seconds << "s";
      out << "\n";
      for (const auto& [k, v] : c.details) out << "      " << k << ": " << v << "\n";
    }
    out << "  overall: " << (a.pass ? "PASS" : "FAIL") << "\n";
  }
  out << (r.pass ? "PASS" : "FAIL") << "\n";
}

}  // namespace ahs
