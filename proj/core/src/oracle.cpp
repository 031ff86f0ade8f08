#include "tropvol/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "tropvol/error.hpp"
#include "tropvol/pseudovertex.hpp"
#include "tropvol/volume.hpp"

namespace tropvol {

namespace {

__extension__ using i128 = __int128;

constexpr std::string_view kModule = "oracle";
constexpr std::size_t kChunkSamples = std::size_t{1} << 14;
constexpr int kGridBits = 32;

using Vec2 = std::array<Rational, 2>;
using Vec3 = std::array<Rational, 3>;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rational cross(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

// Counter-clockwise order around the origin, starting at angle 0, using only
// sign tests.
void sort_by_angle(std::vector<std::pair<Vec2, std::size_t>>& items) {
  const auto upper = [](const Vec2& v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0); };
  std::sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
    const bool ua = upper(a.first);
    const bool ub = upper(b.first);
    if (ua != ub) return ua;
    return cross(a.first, b.first) > 0;
  });
}

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Rational det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

template <std::size_t N>
std::array<Rational, N> centroid(const std::vector<std::array<Rational, N>>& points) {
  std::array<Rational, N> sum{};
  for (const auto& p : points) {
    for (std::size_t k = 0; k < N; ++k) sum[k] += p[k];
  }
  for (auto& s : sum) s /= Rational(static_cast<long>(points.size()));
  return sum;
}

Rational polygon_area(const std::vector<Vec2>& points) {
  const Vec2 center = centroid(points);
  std::vector<std::pair<Vec2, std::size_t>> rel;
  for (std::size_t k = 0; k < points.size(); ++k) {
    rel.push_back({Vec2{points[k][0] - center[0], points[k][1] - center[1]}, k});
  }
  sort_by_angle(rel);
  Rational twice = 0;
  for (std::size_t k = 0; k < rel.size(); ++k) {
    twice += cross(points[rel[k].second], points[rel[(k + 1) % rel.size()].second]);
  }
  return abs(twice) / 2;
}

Rational polyhedron_volume(const Polytrope& p, const std::vector<Pseudovertex>& vertices) {
  std::vector<Vec3> points;
  for (const auto& v : vertices) points.push_back({v.point[0], v.point[1], v.point[2]});
  const Vec3 apex = centroid(points);

  std::map<FacetPair, std::vector<std::size_t>> facets;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    for (const FacetPair& f : vertices[k].tight) facets[f].push_back(k);
  }

  Rational six_volume = 0;
  for (const auto& [pair, members] : facets) {
    if (members.size() < 3) continue;
    const std::vector<int> n = pair.normal(p.dim());
    const Vec3 normal{Rational(n[0]), Rational(n[1]), Rational(n[2])};
    std::vector<Vec3> face;
    for (std::size_t k : members) face.push_back(points[k]);
    const Vec3 center = centroid(face);

    Vec3 u{};
    for (const Vec3& q : face) {
      u = sub(q, center);
      if (dot(u, u) != 0) break;
    }
    const Vec3 w = cross(normal, u);
    std::vector<std::pair<Vec2, std::size_t>> rel;
    for (std::size_t k = 0; k < face.size(); ++k) {
      const Vec3 q = sub(face[k], center);
      rel.push_back({Vec2{dot(q, u), dot(q, w)}, k});
    }
    sort_by_angle(rel);
    const Vec3 a = sub(face[rel[0].second], apex);
    for (std::size_t k = 1; k + 1 < rel.size(); ++k) {
      const Vec3 b = sub(face[rel[k].second], apex);
      const Vec3 c = sub(face[rel[k + 1].second], apex);
      six_volume += abs(det3(a, b, c));
    }
  }
  return six_volume / 6;
}

// Membership on the sample grid in scaled integer arithmetic. Every
// coordinate is x_i = lo_i + width_i * u / 2^32, so with s = L * 2^32, where L
// is the common denominator of the star, s * x_i and s * b_ij are integers.
class GridTester {
 public:
  explicit GridTester(const Polytrope& p) : dim_(p.dim()) {
    const std::size_t n = dim_ + 1;
    Integer denom = 1;
    Rational largest = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        denom = boost::multiprecision::lcm(denom, Integer(boost::multiprecision::denominator(p.bound(i, j))));
        largest = std::max(largest, Rational(abs(p.bound(i, j))));
      }
    }
    // |s * value| stays below 2^100 for the fast path, far inside int128.
    fast_ = Rational(denom) * largest < Rational(Integer(1) << 40) && denom < (Integer(1) << 24);
    scale_ = Rational(denom) * Rational(Integer(1) << kGridBits);
    for (std::size_t i = 0; i < dim_; ++i) {
      lo_.push_back(-p.bound(dim_, i));
      width_.push_back(p.bound(i, dim_) + p.bound(dim_, i));
    }
    for (const HalfSpace& h : p.hrep()) {
      bounds_.push_back(h);
      if (fast_) fast_bounds_.push_back(to_int128(Rational(h.bound * scale_)));
    }
    if (fast_) {
      for (std::size_t i = 0; i < dim_; ++i) {
        fast_lo_.push_back(to_int128(Rational(lo_[i] * scale_)));
        fast_width_.push_back(to_int128(Rational(width_[i] * Rational(denom))));
      }
    }
  }

  const std::vector<Rational>& lo() const { return lo_; }
  const std::vector<Rational>& width() const { return width_; }

  bool contains(const std::vector<std::uint32_t>& u) const {
    if (fast_) {
      std::array<i128, 16> x{};
      std::vector<i128> big;
      i128* coords = x.data();
      if (dim_ + 1 > x.size()) {
        big.resize(dim_ + 1);
        coords = big.data();
      }
      for (std::size_t i = 0; i < dim_; ++i) coords[i] = fast_lo_[i] + fast_width_[i] * u[i];
      coords[dim_] = 0;
      for (std::size_t k = 0; k < bounds_.size(); ++k) {
        if (coords[bounds_[k].i] - coords[bounds_[k].j] > fast_bounds_[k]) return false;
      }
      return true;
    }
    std::vector<Rational> x(dim_ + 1);
    for (std::size_t i = 0; i < dim_; ++i) {
      x[i] = lo_[i] + width_[i] * Rational(Integer(u[i]), Integer(1) << kGridBits);
    }
    for (const HalfSpace& h : bounds_) {
      if (x[h.i] - x[h.j] > h.bound) return false;
    }
    return true;
  }

 private:
  static i128 to_int128(const Rational& r) {
    const Integer& v = boost::multiprecision::numerator(r);
    const bool negative = v < 0;
    Integer mag = abs(v);
    const auto high = Integer(mag >> 64).convert_to<unsigned long long>();
    const auto low = Integer(mag & Integer(~0ULL)).convert_to<unsigned long long>();
    const i128 out = (static_cast<i128>(high) << 64) | static_cast<i128>(low);
    return negative ? -out : out;
  }

  std::size_t dim_;
  bool fast_ = false;
  Rational scale_;
  std::vector<Rational> lo_;
  std::vector<Rational> width_;
  std::vector<HalfSpace> bounds_;
  std::vector<i128> fast_lo_;
  std::vector<i128> fast_width_;
  std::vector<i128> fast_bounds_;
};

std::size_t count_chunk_hits(const GridTester& tester, std::size_t dim, std::uint64_t seed,
                             std::size_t chunk, std::size_t count) {
  std::mt19937_64 engine(splitmix64(seed ^ splitmix64(chunk)));
  std::vector<std::uint32_t> u(dim);
  std::size_t hits = 0;
  for (std::size_t s = 0; s < count; ++s) {
    for (auto& coord : u) coord = static_cast<std::uint32_t>(engine() >> 32);
    if (tester.contains(u)) ++hits;
  }
  return hits;
}

}  // namespace

std::vector<std::size_t> convex_polygon_order(const std::vector<std::vector<Rational>>& points) {
  if (points.empty()) return {};
  std::vector<Vec2> flat;
  for (const auto& q : points) {
    if (q.size() != 2) throw Error(ErrorCode::DimensionMismatch, kModule, "polygon points must be 2d");
    flat.push_back({q[0], q[1]});
  }
  const Vec2 center = centroid(flat);
  std::vector<std::pair<Vec2, std::size_t>> rel;
  for (std::size_t k = 0; k < flat.size(); ++k) {
    rel.push_back({Vec2{flat[k][0] - center[0], flat[k][1] - center[1]}, k});
  }
  sort_by_angle(rel);
  std::vector<std::size_t> order;
  for (const auto& item : rel) order.push_back(item.second);
  return order;
}

Rational exact_volume_low_dim(const Polytrope& p) {
  if (p.dim() != 2 && p.dim() != 3) {
    throw Error(ErrorCode::UnsupportedDimension, kModule,
                "exact oracle supports d = 2 and d = 3, got d = " + std::to_string(p.dim()));
  }
  if (is_degenerate(p)) return 0;
  const std::vector<Pseudovertex> vertices = enumerate_pseudovertices(p);
  if (p.dim() == 2) {
    std::vector<Vec2> points;
    for (const auto& v : vertices) points.push_back({v.point[0], v.point[1]});
    return polygon_area(points);
  }
  return polyhedron_volume(p, vertices);
}

McEstimate monte_carlo_volume(const Polytrope& p, std::size_t samples, std::uint64_t seed,
                              unsigned threads) {
  if (samples < 1000) throw Error(ErrorCode::InvalidArgument, kModule, "Monte Carlo needs at least 1000 samples");
  const std::size_t d = p.dim();
  const GridTester tester(p);

  McEstimate out;
  out.samples = samples;
  out.seed = seed;
  out.box_volume = 1;
  for (std::size_t i = 0; i < d; ++i) {
    out.box.emplace_back(tester.lo()[i], tester.lo()[i] + tester.width()[i]);
    out.box_volume *= tester.width()[i];
  }
  if (is_degenerate(p)) {
    out.estimate = 0;
    return out;
  }

  const std::size_t chunks = (samples + kChunkSamples - 1) / kChunkSamples;
  const auto chunk_size = [&](std::size_t c) {
    return std::min(kChunkSamples, samples - c * kChunkSamples);
  };
  std::vector<std::size_t> hits(chunks, 0);
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  if (workers == 1) {
    for (std::size_t c = 0; c < chunks; ++c) hits[c] = count_chunk_hits(tester, d, seed, c, chunk_size(c));
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t c = w; c < chunks; c += workers) {
          hits[c] = count_chunk_hits(tester, d, seed, c, chunk_size(c));
        }
      });
    }
  }
  out.hits = std::accumulate(hits.begin(), hits.end(), std::size_t{0});

  const Rational fraction(Integer(out.hits), Integer(samples));
  out.estimate = fraction * out.box_volume;
  const double f = to_double(fraction);
  out.stderr_estimate = to_double(out.box_volume) * std::sqrt(f * (1.0 - f) / static_cast<double>(samples));
  return out;
}

CrossCheckReport cross_check(const Polytrope& p, const CrossCheckOptions& options) {
  CrossCheckReport report;
  report.dim = p.dim();
  report.volume_default = compute_volume(p, ObjectivePolicy{}).total;
  report.volume_alternate =
      compute_volume(p, ObjectivePolicy{ObjectiveKind::Powers, options.seed}).total;
  report.objectives_agree = report.volume_default == report.volume_alternate;
  if (!report.objectives_agree) report.notes.push_back("objective totals differ");

  if (p.dim() == 2 || p.dim() == 3) {
    report.exact_oracle = exact_volume_low_dim(p);
    report.oracle_agrees = *report.exact_oracle == report.volume_default;
    if (!report.oracle_agrees) report.notes.push_back("exact oracle disagrees with vertex sum");
  } else {
    McEstimate mc = monte_carlo_volume(p, options.samples, options.seed, options.threads);
    const double gap = std::abs(to_double(Rational(mc.estimate - report.volume_default)));
    report.mc_warning = gap > 3.0 * mc.stderr_estimate;
    if (report.mc_warning) {
      report.notes.push_back("Monte Carlo estimate is more than 3 standard errors from the vertex sum");
    }
    report.monte_carlo = std::move(mc);
  }
  report.pass = report.objectives_agree && report.oracle_agrees;
  return report;
}

}  // namespace tropvol
