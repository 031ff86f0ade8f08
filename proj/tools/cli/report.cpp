#include <algorithm>
#include <sstream>

#include "cli.hpp"

namespace tropvol::cli {

namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

std::string tuple_string(const std::vector<std::string>& parts) { return "(" + join(parts, ", ") + ")"; }

std::string point_string(const std::vector<Rational>& x) {
  std::vector<std::string> parts;
  for (const auto& v : x) parts.push_back(to_display_string(v));
  return tuple_string(parts);
}

std::string integers_string(const std::vector<Integer>& v) {
  std::vector<std::string> parts;
  for (const auto& k : v) parts.push_back(k.str());
  return tuple_string(parts);
}

std::string normal_string(const std::vector<int>& n) {
  std::vector<std::string> parts;
  for (int k : n) parts.push_back(std::to_string(k));
  return tuple_string(parts);
}

std::string generators_string(const std::vector<MultiIndex>& gens) {
  std::vector<std::string> parts;
  for (const auto& g : gens) parts.push_back(g.to_string());
  return join(parts, " ");
}

std::string normals_string(const std::vector<FacetPair>& tight, std::size_t dim) {
  std::vector<std::string> parts;
  for (const auto& f : tight) parts.push_back(normal_string(f.normal(dim)));
  return join(parts, " ");
}

// Left-aligned columns separated by two spaces.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n ") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    std::vector<std::string> fields;
    for (const auto& f : row) fields.push_back(csv_field(f));
    out += join(fields, ",") + "\n";
  }
  return out;
}

json rational_array(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_fraction_string(x));
  return out;
}

json integer_array(const std::vector<Integer>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

json index_json(const MultiIndex& m) {
  json out = json::array();
  for (std::size_t k : m.entries) out.push_back(k + 1);
  return out;
}

json pseudovertex_json(const Pseudovertex& v) {
  json out;
  out["point"] = rational_array(v.point);
  out["generators"] = json::array();
  for (const auto& g : v.generators) out["generators"].push_back(index_json(g));
  out["tight"] = json::array();
  for (const auto& f : v.tight) out["tight"].push_back(json::array({f.i + 1, f.j + 1}));
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

json star_json(const TropMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(m(r, c).is_infinite() ? std::string("inf") : to_fraction_string(m(r, c).value()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json hrep_json(const Polytrope& p) {
  json out = json::array();
  for (const HalfSpace& h : p.hrep()) {
    out.push_back({{"i", h.i + 1}, {"j", h.j + 1}, {"normal", h.normal(p.dim())},
                   {"bound", to_fraction_string(h.bound)}});
  }
  return out;
}

json pseudovertices_json(const std::vector<Pseudovertex>& vertices) {
  json out = json::array();
  for (const auto& v : vertices) out.push_back(pseudovertex_json(v));
  return out;
}

json volume_json(const Polytrope& p, const VolumeReport& report) {
  json out;
  out["dim"] = p.dim();
  out["star"] = star_json(p.star());
  out["hrep"] = hrep_json(p);
  out["pseudovertices"] = json::array();
  for (const VertexTerm& t : report.terms) {
    json v = pseudovertex_json(t.vertex);
    v["f_value"] = to_fraction_string(t.f_value);
    v["gammas"] = integer_array(t.gammas);
    v["delta"] = t.delta.str();
    v["term"] = to_fraction_string(t.term);
    out["pseudovertices"].push_back(std::move(v));
  }
  out["total"] = to_fraction_string(report.total);
  out["objective"] = {{"kind", std::string(to_string(report.objective.kind))},
                      {"c", integer_array(report.objective.c)},
                      {"offset", report.objective.offset.str()}};
  const auto& d = report.diagnostics;
  out["diagnostics"] = {{"multi_indices", d.multi_indices},
                        {"pseudovertices", d.pseudovertices},
                        {"duplicates_merged", d.duplicates_merged},
                        {"objective_retries", d.objective_retries},
                        {"degenerate", d.degenerate}};
  return out;
}

json cross_check_json(const CrossCheckReport& r) {
  json out;
  out["dim"] = r.dim;
  out["volume_default"] = to_fraction_string(r.volume_default);
  out["volume_alternate"] = to_fraction_string(r.volume_alternate);
  out["objectives_agree"] = r.objectives_agree;
  if (r.exact_oracle) {
    out["exact_oracle"] = to_fraction_string(*r.exact_oracle);
    out["oracle_agrees"] = r.oracle_agrees;
  }
  if (r.monte_carlo) {
    const McEstimate& mc = *r.monte_carlo;
    json box = json::array();
    for (const auto& [lo, hi] : mc.box) box.push_back({to_fraction_string(lo), to_fraction_string(hi)});
    out["monte_carlo"] = {{"estimate", to_fraction_string(mc.estimate)},
                          {"estimate_float", to_double(mc.estimate)},
                          {"stderr_float", mc.stderr_estimate},
                          {"samples", mc.samples},
                          {"hits", mc.hits},
                          {"seed", mc.seed},
                          {"box", box},
                          {"box_volume", to_fraction_string(mc.box_volume)}};
    out["mc_warning"] = r.mc_warning;
  }
  out["notes"] = r.notes;
  out["pass"] = r.pass;
  return out;
}

std::string format_star(const TropMatrix& m, Format format) {
  if (format == Format::Json) return dump(json{{"star", star_json(m)}});
  std::vector<std::vector<std::string>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return format == Format::Csv ? csv(rows) : table(rows);
}

std::string format_hrep(const Polytrope& p, Format format) {
  if (format == Format::Json) return dump(json{{"dim", p.dim()}, {"hrep", hrep_json(p)}});
  std::vector<std::vector<std::string>> rows;
  if (format == Format::Csv) {
    rows.push_back({"i", "j", "normal", "bound"});
  } else {
    rows.push_back({"pair", "normal", "bound"});
  }
  for (const HalfSpace& h : p.hrep()) {
    const std::string normal = normal_string(h.normal(p.dim()));
    if (format == Format::Csv) {
      rows.push_back({std::to_string(h.i + 1), std::to_string(h.j + 1), normal, to_fraction_string(h.bound)});
    } else {
      rows.push_back({"(" + std::to_string(h.i + 1) + "," + std::to_string(h.j + 1) + ")", normal,
                      to_display_string(h.bound)});
    }
  }
  return format == Format::Csv ? csv(rows) : table(rows);
}

std::string format_pseudovertices(const Polytrope& p, const std::vector<Pseudovertex>& vertices,
                                  Format format) {
  if (format == Format::Json) {
    return dump(json{{"dim", p.dim()}, {"pseudovertices", pseudovertices_json(vertices)}});
  }
  std::vector<std::vector<std::string>> rows{{"Cramer", "Pseudovertex", "Facet normals"}};
  for (const auto& v : vertices) {
    if (format == Format::Csv) {
      std::vector<std::string> point;
      for (const auto& x : v.point) point.push_back(to_fraction_string(x));
      rows.push_back({generators_string(v.generators), tuple_string(point), normals_string(v.tight, p.dim())});
    } else {
      rows.push_back({generators_string(v.generators), point_string(v.point), normals_string(v.tight, p.dim())});
    }
  }
  return format == Format::Csv ? csv(rows) : table(rows);
}

std::string format_volume(const Polytrope& p, const VolumeReport& report, Format format) {
  if (format == Format::Json) return dump(volume_json(p, report));
  const bool as_csv = format == Format::Csv;
  const auto rational = [&](const Rational& r) { return as_csv ? to_fraction_string(r) : to_display_string(r); };

  std::vector<std::vector<std::string>> rows{
      {"Cramer", "Pseudovertex", "Facet normals", "delta", "f(v)", "gammas", "N_v"}};
  for (const VertexTerm& t : report.terms) {
    std::vector<std::string> point;
    for (const auto& x : t.vertex.point) point.push_back(rational(x));
    rows.push_back({generators_string(t.vertex.generators), tuple_string(point),
                    normals_string(t.vertex.tight, p.dim()), t.delta.str(), rational(t.f_value),
                    integers_string(t.gammas), rational(t.term)});
  }
  if (as_csv) {
    rows.push_back({"total", "", "", "", "", "", to_fraction_string(report.total)});
    return csv(rows);
  }
  std::ostringstream out;
  out << "dim = " << p.dim() << "\n";
  out << "objective = " << to_string(report.objective.kind) << " c = "
      << integers_string(report.objective.c) << "\n";
  if (report.diagnostics.degenerate) {
    out << "degenerate polytrope (zero width)\n";
  } else {
    out << table(rows);
  }
  const auto& d = report.diagnostics;
  out << "pseudovertices = " << d.pseudovertices << " of " << d.multi_indices
      << " multi-indices (" << d.duplicates_merged << " merged), objective retries = "
      << d.objective_retries << "\n";
  out << "total = " << to_display_string(report.total) << "\n";
  return out.str();
}

std::string format_cross_check(const CrossCheckReport& r, Format format) {
  if (format == Format::Json) return dump(cross_check_json(r));
  std::vector<std::vector<std::string>> rows{{"check", "value", "status"}};
  rows.push_back({"volume (default objective)", to_display_string(r.volume_default), ""});
  rows.push_back({"volume (powers objective)", to_display_string(r.volume_alternate),
                  r.objectives_agree ? "equal" : "DIFFERENT"});
  if (r.exact_oracle) {
    rows.push_back({"exact oracle", to_display_string(*r.exact_oracle), r.oracle_agrees ? "equal" : "DIFFERENT"});
  }
  if (r.monte_carlo) {
    std::ostringstream mc;
    mc.precision(10);
    mc << to_double(r.monte_carlo->estimate) << " +- " << r.monte_carlo->stderr_estimate << " (float, "
       << r.monte_carlo->samples << " samples, seed " << r.monte_carlo->seed << ")";
    rows.push_back({"monte carlo", mc.str(), r.mc_warning ? "WARNING >3 stderr" : "within 3 stderr"});
  }
  rows.push_back({"overall", "", r.pass ? "PASS" : "FAIL"});
  if (format == Format::Csv) return csv(rows);
  std::string out = table(rows);
  for (const auto& note : r.notes) out += "note: " + note + "\n";
  return out;
}

}  // namespace tropvol::cli
