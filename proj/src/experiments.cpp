#include "medianlab/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "medianlab/error.hpp"
#include "medianlab/parallel.hpp"

namespace medianlab {

namespace {

// Least-squares slope/intercept over (x, y) pairs.
std::pair<double, double> fit_line(const std::vector<std::pair<double, double>>& pts) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(pts.size());
  const double var = sxx - sx * sx / n;
  if (var == 0) return {0.0, sy / n};
  const double slope = (sxy - sx * sy / n) / var;
  return {slope, (sy - slope * sx) / n};
}

}  // namespace

CayleyBall cayley_ball(const Group& g, int radius, const Caps& caps, unsigned workers) {
  if (!g.enumerable())
    throw Error(ErrorKind::NotEnumerable, g.name() + " does not support ball enumeration");
  if (radius < 0) throw Error(ErrorKind::InvalidParam, "radius must be non-negative");

  CayleyBall ball;
  ball.model = g.name();
  ball.radius = radius;
  const std::vector<Generator> gens = g.symmetric_generators();

  ElementSet seen;
  Element id = g.identity();
  seen.insert(id);
  ball.elements.push_back(id);
  ball.lengths.push_back(0);
  ball.sphere_sizes.push_back(1);

  std::size_t frontier_begin = 0, frontier_end = 1;
  for (int r = 1; r <= radius && frontier_begin < frontier_end; ++r) {
    // Parallel product computation; candidates are merged in worker order so
    // the discovery sequence matches the serial one exactly.
    const std::size_t frontier = frontier_end - frontier_begin;
    std::vector<std::vector<Element>> chunks(std::max(1u, workers));
    parallel_chunks(frontier, workers, [&](std::size_t lo, std::size_t hi, unsigned w) {
      std::vector<Element>& out = chunks[w];
      out.reserve((hi - lo) * gens.size());
      for (std::size_t i = lo; i < hi; ++i)
        for (const Generator& s : gens)
          out.push_back(g.mul(ball.elements[frontier_begin + i], s.value));
    });
    std::size_t sphere = 0;
    for (const auto& chunk : chunks)
      for (const Element& e : chunk) {
        if (!seen.insert(e)) continue;
        if (ball.elements.size() >= caps.ball_cap)
          throw Error(ErrorKind::CapExceeded,
                      "ball of " + g.name() + " exceeds the element cap at radius " +
                          std::to_string(r));
        ball.elements.push_back(e);
        ball.lengths.push_back(r);
        ++sphere;
      }
    ball.sphere_sizes.push_back(sphere);
    frontier_begin = frontier_end;
    frontier_end = ball.elements.size();
  }
  while (ball.sphere_sizes.size() <= static_cast<std::size_t>(radius))
    ball.sphere_sizes.push_back(0);  // finite group exhausted early
  return ball;
}

BallIndex::BallIndex(const CayleyBall& ball) : ball_(ball) {
  for (std::size_t i = 0; i < ball.elements.size(); ++i)
    buckets_[ball.elements[i].hash()].push_back(i);
}

long long BallIndex::length_of(const Element& e) const {
  auto it = buckets_.find(e.hash());
  if (it == buckets_.end()) return -1;
  for (std::size_t i : it->second)
    if (ball_.elements[i] == e) return ball_.lengths[i];
  return -1;
}

DistortionProfile distortion_profile(const Group& g, const Element& central, int radius,
                                     const Caps& caps, unsigned workers) {
  for (const Generator& s : g.generators())
    if (!(g.mul(central, s.value) == g.mul(s.value, central)))
      throw Error(ErrorKind::InvalidParam,
                  "element does not commute with generator '" + s.name + "'");

  DistortionProfile profile;
  profile.model = g.name();
  profile.central = central.str();
  profile.radius = radius;

  const CayleyBall ball = cayley_ball(g, radius, caps, workers);
  const BallIndex index(ball);

  // Scan powers until the element cycles back to the identity or the ball
  // stops answering for a while (lengths grow without bound past that).
  const Element id = g.identity();
  Element power = central;
  int misses = 0;
  const long long hard_stop = 100 + 10LL * radius * radius;
  for (long long k = 1; k <= hard_stop && misses < 25; ++k) {
    if (power == id) break;
    long long len = index.length_of(power);
    if (len >= 0) {
      profile.points.push_back({k, len});
      misses = 0;
    } else {
      ++misses;
    }
    power = g.mul(power, central);
  }

  std::vector<std::pair<double, double>> logs;
  for (const DistortionPoint& p : profile.points)
    if (p.k >= 2 && p.length >= 1)
      logs.push_back({std::log(static_cast<double>(p.k)), std::log(static_cast<double>(p.length))});
  if (logs.size() >= 5) {
    profile.fit_ok = true;
    profile.exponent = fit_line(logs).first;
  } else {
    profile.note = "insufficient data";
  }
  return profile;
}

CoarseEmbeddingReport coarse_embedding_report(const ExtensionGroup& ext, int radius,
                                              const Caps& caps, unsigned workers) {
  CoarseEmbeddingReport report;
  report.model = ext.name();
  report.radius = radius;

  const CayleyBall ball = cayley_ball(ext, radius, caps, workers);
  // Every base part of an extension element of length r has base length <= r:
  // the projection never stretches a generator.
  const CayleyBall base_ball = cayley_ball(ext.base(), radius, caps, workers);
  const BallIndex base_index(base_ball);

  std::vector<EnvelopeRow> rows(static_cast<std::size_t>(radius) + 1);
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r].r = static_cast<long long>(r);
  for (std::size_t i = 0; i < ball.elements.size(); ++i) {
    const auto& e = ball.elements[i].as<ExtensionElement>();
    long long base_len = base_index.length_of(e.q());
    if (base_len < 0)
      throw Error(ErrorKind::Internal, "base part escaped the projected ball");
    long long image = std::llabs(ext.phi(ball.elements[i])) + base_len;
    EnvelopeRow& row = rows[static_cast<std::size_t>(ball.lengths[i])];
    if (row.count == 0) {
      row.min_image = row.max_image = image;
    } else {
      row.min_image = std::min(row.min_image, image);
      row.max_image = std::max(row.max_image, image);
    }
    ++row.count;
  }
  report.rows = std::move(rows);

  std::vector<std::pair<double, double>> lo, hi;
  for (const EnvelopeRow& row : report.rows)
    if (row.r >= 1 && row.count > 0) {
      lo.push_back({static_cast<double>(row.r), static_cast<double>(row.min_image)});
      hi.push_back({static_cast<double>(row.r), static_cast<double>(row.max_image)});
    }
  if (lo.size() >= 2) {
    std::tie(report.lower_slope, report.lower_intercept) = fit_line(lo);
    std::tie(report.upper_slope, report.upper_intercept) = fit_line(hi);
    report.lower_positive = report.lower_slope > 0;
  }
  return report;
}

}  // namespace medianlab
