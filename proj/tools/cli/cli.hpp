#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tropvol/oracle.hpp"
#include "tropvol/polytrope.hpp"
#include "tropvol/pseudovertex.hpp"
#include "tropvol/tropical.hpp"
#include "tropvol/volume.hpp"

namespace tropvol::cli {

/// Rows are separated by newlines or ';', entries by whitespace or ','.
/// Entries are integers, fractions "p/q" or "inf" (any case). '#' starts a
/// comment that runs to the end of the line. Throws Error(ParseError) with the
/// line and column of the bad token, Error(RaggedRows) for unequal rows.
TropMatrix parse_matrix(std::string_view text);

/// Inverse of parse_matrix: one row per line, entries separated by spaces.
std::string serialize_matrix(const TropMatrix& m);

/// Reads the "star" field of a JSON report.
TropMatrix star_from_json(const nlohmann::json& report);

enum class Format { Text, Json, Csv };

nlohmann::json star_json(const TropMatrix& m);
nlohmann::json hrep_json(const Polytrope& p);
nlohmann::json pseudovertices_json(const std::vector<Pseudovertex>& vertices);
nlohmann::json volume_json(const Polytrope& p, const VolumeReport& report);
nlohmann::json cross_check_json(const CrossCheckReport& report);

std::string format_star(const TropMatrix& m, Format format);
std::string format_hrep(const Polytrope& p, Format format);
std::string format_pseudovertices(const Polytrope& p, const std::vector<Pseudovertex>& vertices,
                                  Format format);
std::string format_volume(const Polytrope& p, const VolumeReport& report, Format format);
std::string format_cross_check(const CrossCheckReport& report, Format format);

/// Closed polygon through the pseudovertices of a 2d polytrope, vertices
/// marked and tropical vertices highlighted. Throws UnsupportedDimension for
/// d != 2 and InvalidArgument for a degenerate polytrope.
std::string render_svg_2d(const Polytrope& p);

/// Entry point shared by the executable and the tests. args excludes the
/// program name. Returns 0 on success, 1 on domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace tropvol::cli
