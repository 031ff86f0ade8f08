#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "tropvol/error.hpp"
#include "tropvol/generate.hpp"

namespace tropvol::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  std::string format = "text";
  std::string objective = "ones";
  std::string out;
  bool points = false;
  std::uint64_t seed = 1;
  std::size_t samples = 200000;
  std::size_t dim = 2;
  long entry_min = 0;
  long entry_max = 100;
};

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw UsageError("unknown format '" + name + "'");
}

ObjectiveKind parse_objective(const std::string& name) {
  if (name == "ones") return ObjectiveKind::Ones;
  if (name == "powers") return ObjectiveKind::Powers;
  if (name == "random") return ObjectiveKind::Random;
  throw UsageError("unknown objective '" + name + "'");
}

std::string read_input(const Options& opt, std::istream& in) {
  if (opt.input == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(opt.input, std::ios::binary);
  if (!file) throw UsageError("cannot open input file '" + opt.input + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

TropMatrix load_matrix(const Options& opt, std::istream& in) {
  const std::string text = read_input(opt, in);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::ParseError, "cli", std::string("invalid JSON input: ") + e.what());
    }
    return star_from_json(doc);
  }
  return parse_matrix(text);
}

Polytrope load_polytrope(const Options& opt, std::istream& in) {
  TropMatrix m = load_matrix(opt, in);
  return opt.points ? Polytrope::from_points(m) : Polytrope::from_star(std::move(m));
}

std::string check_report(const TropMatrix& m, bool points, Format format) {
  std::vector<std::pair<std::string, std::string>> fields;
  std::string note;
  std::optional<Polytrope> p;
  try {
    p = points ? Polytrope::from_points(m) : Polytrope::from_star(m);
    fields.emplace_back("kleene", "true");
  } catch (const Error& e) {
    fields.emplace_back("kleene", "false");
    note = e.what();
  }
  if (p) {
    const bool degenerate = is_degenerate(*p);
    const std::vector<Pseudovertex> vertices = enumerate_pseudovertices(*p);
    fields.emplace_back("degenerate", degenerate ? "true" : "false");
    fields.emplace_back("maximal", vertices.size() == central_binomial(p->dim()) ? "true" : "false");
    fields.emplace_back("simple", !degenerate && is_simple(*p, vertices) ? "true" : "false");
    fields.emplace_back("pseudovertices", std::to_string(vertices.size()));
  }
  if (format == Format::Json) {
    nlohmann::json j;
    for (const auto& [k, v] : fields) {
      if (v == "true" || v == "false") {
        j[k] = v == "true";
      } else {
        j[k] = std::stoul(v);
      }
    }
    if (!note.empty()) j["reason"] = note;
    return j.dump(2) + "\n";
  }
  std::string out;
  if (format == Format::Csv) {
    std::string head, row;
    for (const auto& [k, v] : fields) {
      head += (head.empty() ? "" : ",") + k;
      row += (row.empty() ? "" : ",") + v;
    }
    return head + "\n" + row + "\n";
  }
  for (const auto& [k, v] : fields) out += k + "=" + v + "\n";
  if (!note.empty()) out += "reason: " + note + "\n";
  return out;
}

std::string dispatch(const std::string& command, const Options& opt, std::istream& in) {
  const Format format = parse_format(opt.format);
  if (command == "random") {
    GenConfig cfg{opt.dim, opt.entry_min, opt.entry_max, opt.seed};
    return format_star(random_polytrope(cfg).star(), format);
  }
  if (command == "star") {
    TropMatrix m = load_matrix(opt, in);
    return format_star(kleene_star(opt.points ? canonical_projection(m) : m), format);
  }
  if (command == "check") return check_report(load_matrix(opt, in), opt.points, format);

  const Polytrope p = load_polytrope(opt, in);
  if (command == "hrep") return format_hrep(p, format);
  if (command == "pv") return format_pseudovertices(p, enumerate_pseudovertices(p), format);
  if (command == "volume") {
    ObjectivePolicy policy;
    policy.first = parse_objective(opt.objective);
    policy.seed = opt.seed;
    return format_volume(p, compute_volume(p, policy), format);
  }
  if (command == "cross-check") {
    return format_cross_check(cross_check(p, CrossCheckOptions{opt.samples, opt.seed, 1}), format);
  }
  if (command == "render") return render_svg_2d(p);
  throw UsageError("unknown subcommand '" + command + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact volumes of polytropes from their Kleene star matrix", "tropvol"};
  app.require_subcommand(1, 1);
  Options opt;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"star", "print the Kleene star closure of the input"},
      {"hrep", "print the half-space representation"},
      {"pv", "print the pseudovertices with generators and tight facets"},
      {"volume", "compute the exact volume with per-vertex terms"},
      {"check", "report kleene / degenerate / maximal / simple"},
      {"cross-check", "compare the volume against independent oracles"},
      {"render", "write an SVG drawing of a 2d polytrope"},
      {"random", "generate a random polytrope star matrix"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
  }

  app.add_option("-i,--input", opt.input, "input matrix file, '-' for stdin")->capture_default_str();
  app.add_option("-f,--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_flag("--points", opt.points, "input columns are arbitrary points, not a Kleene star");
  app.add_option("--objective", opt.objective, "first objective of the volume ladder")
      ->check(CLI::IsMember({"ones", "powers", "random"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for random objectives, sampling and generation")
      ->capture_default_str();
  app.add_option("--samples", opt.samples, "Monte Carlo samples for cross-check (d >= 4)")
      ->check(CLI::Range(std::size_t{1000}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  app.add_option("-o,--out", opt.out, "write output to this file instead of stdout");
  app.add_option("--dim", opt.dim, "dimension for random")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--min", opt.entry_min, "smallest entry for random")->capture_default_str();
  app.add_option("--max", opt.entry_max, "largest entry for random")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const std::string text = dispatch(command, opt, in);
    if (opt.out.empty()) {
      out << text;
    } else {
      std::ofstream file(opt.out, std::ios::binary);
      if (!file) throw UsageError("cannot open output file '" + opt.out + "'");
      file << text;
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error [" << e.module() << "] " << to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tropvol::cli
