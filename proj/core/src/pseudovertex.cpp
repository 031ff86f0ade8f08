#include "tropvol/pseudovertex.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>

#include "tropvol/error.hpp"
#include "tropvol/exact.hpp"

namespace tropvol {

namespace {

constexpr std::string_view kModule = "pseudovertex";

void extend(std::size_t dim, std::size_t start, MultiIndex& current, std::vector<MultiIndex>& out) {
  if (current.entries.size() == dim) {
    out.push_back(current);
    return;
  }
  for (std::size_t k = start; k <= dim; ++k) {
    current.entries.push_back(k);
    extend(dim, k, current, out);
    current.entries.pop_back();
  }
}

const Rational& coordinate(const std::vector<Rational>& x, std::size_t k) {
  static const Rational zero = 0;
  return k == x.size() ? zero : x[k];
}

}  // namespace

std::size_t MultiIndex::count(std::size_t k) const {
  return static_cast<std::size_t>(std::count(entries.begin(), entries.end(), k));
}

std::string MultiIndex::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(entries[k] + 1);
  }
  return out + ")";
}

std::vector<int> FacetPair::normal(std::size_t dim) const {
  return HalfSpace{i, j, Rational(0)}.normal(dim);
}

std::vector<MultiIndex> multi_indices(std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, kModule, "dimension must be at least 1");
  std::vector<MultiIndex> out;
  out.reserve(central_binomial(dim));
  MultiIndex current;
  extend(dim, 0, current, out);
  return out;
}

std::size_t central_binomial(std::size_t dim) {
  std::size_t result = 1;
  for (std::size_t k = 1; k <= dim; ++k) result = result * (dim + k) / k;
  return result;
}

HomogeneousPoint tropical_cramer(const TropMatrix& rows) {
  if (rows.cols() != rows.rows() + 1) {
    throw Error(ErrorCode::DimensionMismatch, kModule, "Cramer's rule needs a d x (d+1) matrix");
  }
  if (!rows.all_finite()) {
    throw Error(ErrorCode::InfiniteEntry, kModule, "Cramer's rule needs finite entries");
  }
  std::vector<TropScalar> coords;
  coords.reserve(rows.cols());
  for (std::size_t k = 0; k < rows.cols(); ++k) coords.push_back(tdet_min(rows.without_column(k)));
  return HomogeneousPoint(std::move(coords));
}

namespace {

std::vector<Rational> cramer_point(const std::vector<std::vector<Rational>>& vertices, const MultiIndex& index) {
  const std::size_t d = vertices.size() - 1;
  if (index.entries.size() != d) {
    throw Error(ErrorCode::DimensionMismatch, kModule, "multi-index length differs from dimension");
  }
  TropMatrix rows(d, d + 1);
  for (std::size_t r = 0; r < d; ++r) {
    const std::vector<Rational>& v = vertices.at(index.entries[r]);
    for (std::size_t c = 0; c <= d; ++c) rows(r, c) = TropScalar(v[c]);
  }
  const HomogeneousPoint cramer = tropical_cramer(rows);
  // Negating the min-convention Cramer vector gives the max-convention
  // intersection point, i.e. the pseudovertex.
  std::vector<Rational> point;
  point.reserve(d);
  const Rational& last = cramer[d].value();
  for (std::size_t i = 0; i < d; ++i) point.emplace_back(last - cramer[i].value());
  return point;
}

std::vector<std::vector<Rational>> homogeneous_vertices(const Polytrope& p) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t k = 0; k <= p.dim(); ++k) out.push_back(p.homogeneous_vertex(k));
  return out;
}

// Vertex coordinates as int64 when every one is an integer small enough that
// d-term sums and their differences cannot overflow.
std::optional<std::vector<std::int64_t>> integer_vertices(const std::vector<std::vector<Rational>>& vertices) {
  constexpr std::int64_t kBound = std::int64_t{1} << 48;
  std::vector<std::int64_t> out;
  for (const auto& v : vertices) {
    for (const Rational& x : v) {
      if (boost::multiprecision::denominator(x) != 1) return std::nullopt;
      const Integer& n = boost::multiprecision::numerator(x);
      if (n >= kBound || n <= -kBound) return std::nullopt;
      out.push_back(n.convert_to<std::int64_t>());
    }
  }
  return out;
}

// Same as the rational path: C_k = tdet of the rows with column k removed,
// pseudovertex_i = C_d - C_i.
std::vector<Rational> cramer_point_int(const std::vector<std::int64_t>& table, std::size_t d, const MultiIndex& index) {
  const std::size_t n = d + 1;
  std::vector<std::int64_t> c(n);
  std::vector<std::size_t> cols;
  cols.reserve(d);
  for (std::size_t k = 0; k < n; ++k) {
    cols.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k) cols.push_back(j);
    }
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    do {
      std::int64_t sum = 0;
      for (std::size_t r = 0; r < d; ++r) sum += table[index.entries[r] * n + cols[r]];
      best = std::min(best, sum);
    } while (std::next_permutation(cols.begin(), cols.end()));
    c[k] = best;
  }
  std::vector<Rational> point;
  point.reserve(d);
  for (std::size_t i = 0; i < d; ++i) point.emplace_back(c[d] - c[i]);
  return point;
}

}  // namespace

std::vector<Rational> cramer_point(const Polytrope& p, const MultiIndex& index) {
  return cramer_point(homogeneous_vertices(p), index);
}

std::vector<FacetPair> active_facets(const Polytrope& p, const std::vector<Rational>& v) {
  if (v.size() != p.dim()) throw Error(ErrorCode::DimensionMismatch, kModule, "point dimension mismatch");
  std::vector<FacetPair> tight;
  Rational diff;
  for (const HalfSpace& h : p.hrep()) {
    diff = coordinate(v, h.i);
    diff -= coordinate(v, h.j);
    if (diff == h.bound) tight.push_back({h.i, h.j});
  }
  return tight;
}

std::vector<Pseudovertex> enumerate_pseudovertices(const Polytrope& p) {
  std::vector<Pseudovertex> out;
  std::map<std::vector<Rational>, std::size_t> seen;
  const auto vertices = homogeneous_vertices(p);
  const auto table = integer_vertices(vertices);
  for (MultiIndex& index : multi_indices(p.dim())) {
    std::vector<Rational> point =
        table ? cramer_point_int(*table, p.dim(), index) : cramer_point(vertices, index);
    auto [it, inserted] = seen.try_emplace(point, out.size());
    if (inserted) {
      out.push_back(Pseudovertex{std::move(point), {std::move(index)}, {}});
    } else {
      out[it->second].generators.push_back(std::move(index));
    }
  }
  for (Pseudovertex& v : out) {
    if (!contains(p, v.point)) {
      throw Error(ErrorCode::Internal, kModule,
                  "Cramer point of " + v.generators.front().to_string() + " lies outside the polytrope");
    }
    v.tight = active_facets(p, v.point);
  }
  return out;
}

bool is_maximal(const Polytrope& p) {
  return enumerate_pseudovertices(p).size() == central_binomial(p.dim());
}

bool is_simple(const Polytrope& p, const std::vector<Pseudovertex>& vertices) {
  const std::size_t d = p.dim();
  for (const Pseudovertex& v : vertices) {
    if (v.tight.size() != d) return false;
    std::vector<std::vector<Integer>> columns;
    for (const FacetPair& f : v.tight) {
      const std::vector<int> n = f.normal(d);
      columns.emplace_back(n.begin(), n.end());
    }
    if (det_exact(IntMatrix::from_columns(columns)) == 0) return false;
  }
  return true;
}

bool is_simple(const Polytrope& p) { return is_simple(p, enumerate_pseudovertices(p)); }

}  // namespace tropvol
