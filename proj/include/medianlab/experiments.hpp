#pragma once

#include <string>
#include <vector>

#include "medianlab/cocycle.hpp"
#include "medianlab/group.hpp"

namespace medianlab {

// Exact closed ball in the word metric, BFS order (identity first, then by
// length; within a sphere, parent order then generator order).
struct CayleyBall {
  std::string model;
  int radius = 0;
  std::vector<Element> elements;
  std::vector<int> lengths;                // parallel to elements
  std::vector<std::size_t> sphere_sizes;   // index r, r = 0..radius
  std::size_t size() const { return elements.size(); }
};

// Worker count only affects wall time: sphere sizes and element order are
// identical for every worker count. Throws NotEnumerable, CapExceeded.
CayleyBall cayley_ball(const Group& g, int radius, const Caps& caps = default_caps(),
                       unsigned workers = 1);

// Lookup table over a ball; resolves hash collisions by exact equality.
class BallIndex {
 public:
  explicit BallIndex(const CayleyBall& ball);
  // Word length of e, or -1 when e lies outside the ball.
  long long length_of(const Element& e) const;

 private:
  const CayleyBall& ball_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets_;
};

struct DistortionPoint {
  long long k = 0;       // central power
  long long length = 0;  // exact word length of central^k
};

struct DistortionProfile {
  std::string model;
  std::string central;
  int radius = 0;
  std::vector<DistortionPoint> points;
  bool fit_ok = false;    // needs >= 5 points with k >= 2
  double exponent = 0.0;  // log-log least-squares slope over k >= 2
  std::string note;       // "insufficient data" when the fit is skipped
};

// Lengths of central powers inside B(radius). Verifies that the element
// commutes with every generator first (InvalidParam otherwise).
DistortionProfile distortion_profile(const Group& g, const Element& central, int radius,
                                     const Caps& caps = default_caps(), unsigned workers = 1);

struct EnvelopeRow {
  long long r = 0;  // |g| in the extension
  long long min_image = 0;
  long long max_image = 0;
  std::size_t count = 0;
};

// Ball-scan of g -> |phi(g)| + |base part|: linear envelopes of the image
// size against the extension word length.
struct CoarseEmbeddingReport {
  std::string model;
  int radius = 0;
  std::vector<EnvelopeRow> rows;  // r = 0..radius
  double lower_slope = 0.0, lower_intercept = 0.0;  // fit of (r, min_image), r >= 1
  double upper_slope = 0.0, upper_intercept = 0.0;  // fit of (r, max_image), r >= 1
  bool lower_positive = false;
};

CoarseEmbeddingReport coarse_embedding_report(const ExtensionGroup& ext, int radius,
                                              const Caps& caps = default_caps(),
                                              unsigned workers = 1);

}  // namespace medianlab
