#include "tropvol/volume.hpp"

#include <algorithm>
#include <random>

#include <boost/random/uniform_int_distribution.hpp>

#include "tropvol/error.hpp"
#include "tropvol/exact.hpp"

namespace tropvol {

namespace {

constexpr std::string_view kModule = "volume";
constexpr long kRandomObjectiveRange = 1000;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_simple(const Polytrope& p, const Pseudovertex& v) {
  if (v.tight.size() != p.dim()) {
    throw Error(ErrorCode::NonSimple, kModule,
                "pseudovertex " + v.generators.front().to_string() + " has " +
                    std::to_string(v.tight.size()) + " tight half-spaces, expected " +
                    std::to_string(p.dim()));
  }
}

VolumeReport degenerate_report(const Polytrope& p, Objective objective) {
  VolumeReport report;
  report.total = 0;
  report.objective = std::move(objective);
  report.diagnostics.multi_indices = central_binomial(p.dim());
  report.diagnostics.degenerate = true;
  return report;
}

VolumeReport sum_terms(const Polytrope& p, const std::vector<Pseudovertex>& vertices,
                       const Objective& objective) {
  const std::size_t d = p.dim();
  VolumeReport report;
  report.objective = objective;
  report.total = 0;
  report.terms.reserve(vertices.size());
  for (const Pseudovertex& v : vertices) {
    std::vector<std::vector<int>> normals;
    normals.reserve(d);
    for (const FacetPair& f : v.tight) normals.push_back(f.normal(d));
    VertexTerm term = [&] {
      try {
        return vertex_term(v, normals, objective, d);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Singular) throw;
        throw Error(ErrorCode::NonSimple, kModule,
                    "tight normals at " + v.generators.front().to_string() + " are dependent");
      }
    }();
    report.total += term.term;
    report.terms.push_back(std::move(term));
  }
  report.diagnostics.multi_indices = central_binomial(d);
  report.diagnostics.pseudovertices = vertices.size();
  report.diagnostics.duplicates_merged = central_binomial(d) - vertices.size();
  return report;
}

}  // namespace

std::string_view to_string(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::Ones: return "ones";
    case ObjectiveKind::Powers: return "powers";
    case ObjectiveKind::Random: return "random";
    case ObjectiveKind::Custom: return "custom";
  }
  return "unknown";
}

Objective Objective::ones(std::size_t dim) {
  return Objective{ObjectiveKind::Ones, std::vector<Integer>(dim, Integer(1)), 0};
}

Objective Objective::powers(const Polytrope& p) {
  Rational largest = 0;
  for (const HalfSpace& h : p.hrep()) largest = std::max(largest, Rational(abs(h.bound)));
  const Integer m = 1 + 2 * (ceil(largest) + 1);
  Objective obj{ObjectiveKind::Powers, {}, 0};
  Integer power = 1;
  for (std::size_t k = 0; k < p.dim(); ++k) {
    obj.c.push_back(power);
    power *= m;
  }
  return obj;
}

Objective Objective::random(std::size_t dim, std::uint64_t seed, unsigned attempt) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, kModule, "objective dimension must be positive");
  std::mt19937_64 engine(splitmix64(seed ^ splitmix64(attempt)));
  boost::random::uniform_int_distribution<long> dist(-kRandomObjectiveRange, kRandomObjectiveRange);
  Objective obj{ObjectiveKind::Random, std::vector<Integer>(dim), 0};
  do {
    for (Integer& v : obj.c) v = dist(engine);
  } while (std::all_of(obj.c.begin(), obj.c.end(), [](const Integer& v) { return v == 0; }));
  return obj;
}

Objective Objective::custom(std::vector<Integer> c, Integer offset) {
  if (c.empty() || std::all_of(c.begin(), c.end(), [](const Integer& v) { return v == 0; })) {
    throw Error(ErrorCode::InvalidArgument, kModule, "objective vector must be nonzero");
  }
  return Objective{ObjectiveKind::Custom, std::move(c), std::move(offset)};
}

Rational Objective::evaluate(const std::vector<Rational>& x) const {
  if (x.size() != c.size()) throw Error(ErrorCode::DimensionMismatch, kModule, "objective dimension mismatch");
  Rational value(offset);
  for (std::size_t k = 0; k < x.size(); ++k) value += Rational(c[k]) * x[k];
  return value;
}

VertexTerm vertex_term(const Pseudovertex& v, std::span<const std::vector<int>> normals,
                       const Objective& objective, std::size_t dim) {
  if (normals.size() != dim || objective.c.size() != dim) {
    throw Error(ErrorCode::DimensionMismatch, kModule, "need exactly d normals and a d-vector objective");
  }
  std::vector<std::vector<Integer>> columns;
  columns.reserve(dim);
  for (const auto& n : normals) {
    if (n.size() != dim) throw Error(ErrorCode::DimensionMismatch, kModule, "normal of wrong length");
    columns.emplace_back(n.begin(), n.end());
  }
  const IntMatrix basis = IntMatrix::from_columns(columns);

  VertexTerm out;
  out.vertex = v;
  out.delta = abs(det_exact(basis));
  out.gammas = solve_unimodular(basis, objective.c);
  for (std::size_t k = 0; k < dim; ++k) {
    if (out.gammas[k] == 0) {
      throw Error(ErrorCode::ZeroGamma, kModule,
                  "objective is constant along an edge at " +
                      (v.generators.empty() ? std::string("vertex") : v.generators.front().to_string()));
    }
  }
  out.f_value = objective.evaluate(v.point);
  Integer denominator = factorial(static_cast<unsigned>(dim)) * out.delta;
  for (const Integer& g : out.gammas) denominator *= g;
  out.term = pow(out.f_value, static_cast<unsigned>(dim)) / Rational(denominator);
  return out;
}

VolumeReport compute_volume(const Polytrope& p, const Objective& objective) {
  if (objective.c.size() != p.dim()) {
    throw Error(ErrorCode::DimensionMismatch, kModule, "objective dimension mismatch");
  }
  if (is_degenerate(p)) return degenerate_report(p, objective);
  const std::vector<Pseudovertex> vertices = enumerate_pseudovertices(p);
  for (const Pseudovertex& v : vertices) require_simple(p, v);
  return sum_terms(p, vertices, objective);
}

VolumeReport compute_volume(const Polytrope& p, const ObjectivePolicy& policy) {
  const std::size_t d = p.dim();
  std::vector<Objective> ladder;
  if (policy.first == ObjectiveKind::Ones) ladder.push_back(Objective::ones(d));
  if (policy.first == ObjectiveKind::Ones || policy.first == ObjectiveKind::Powers) {
    ladder.push_back(Objective::powers(p));
  }
  for (unsigned k = 0; k < policy.random_attempts; ++k) {
    ladder.push_back(Objective::random(d, policy.seed, k));
  }
  if (ladder.empty()) {
    throw Error(ErrorCode::InvalidArgument, kModule, "objective policy yields no objectives");
  }

  if (is_degenerate(p)) return degenerate_report(p, ladder.front());
  const std::vector<Pseudovertex> vertices = enumerate_pseudovertices(p);
  for (const Pseudovertex& v : vertices) require_simple(p, v);

  for (std::size_t attempt = 0; attempt < ladder.size(); ++attempt) {
    try {
      VolumeReport report = sum_terms(p, vertices, ladder[attempt]);
      report.diagnostics.objective_retries = attempt;
      return report;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ZeroGamma) throw;
    }
  }
  throw Error(ErrorCode::ObjectiveExhausted, kModule,
              "every objective on the ladder is constant along some edge");
}

}  // namespace tropvol
