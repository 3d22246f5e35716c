#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "sgcor/core.hpp"

namespace sgcor {

/// (master_seed, stream_id) fully determines a random sequence. Replicate r of
/// an experiment uses stream_id = r; distinct ids give independent streams.
struct RngStream {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;

  /// A child stream keyed by k, independent of the parent and its siblings.
  RngStream substream(std::uint64_t k) const;
};

/// Generator bound to one stream. Variates are built from raw 64-bit engine
/// output with fixed transforms, so sequences are identical across platforms
/// and standard libraries.
class Rng {
 public:
  explicit Rng(const RngStream& stream);

  /// Uniform on (0, 1).
  double uniform();
  /// Two independent standard normals (Box-Muller).
  std::pair<double, double> normal_pair();
  /// Gamma(shape, scale 1), Marsaglia-Tsang; shape > 0.
  double gamma(double shape);
  double chi_squared(double nu) { return 2.0 * gamma(0.5 * nu); }
  bool coin() { return (engine_() >> 63) != 0; }
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// n independent draws from an elliptical law:
///   normal  z = mu + S w,                      w ~ N(0, I)
///   t(nu)   z = mu + S w sqrt(nu / chi2_nu)
///   kotz    z = mu + S r u,  r ~ Gamma(2, 1), u uniform on the unit circle
/// with S = spd_sqrt(sigma) (affine.hpp). DomainError for n == 0 or an invalid spec;
/// TooFewPoints for n == 1 (a BivariateSample needs two observations).
BivariateSample sample_elliptical(const EllipticalModelSpec& spec, std::size_t n,
                                  const RngStream& stream);

/// Same draws as sample_elliptical, as raw points (n >= 1).
std::vector<Point2> draw_elliptical(const EllipticalModelSpec& spec, std::size_t n,
                                    const RngStream& stream);

}  // namespace sgcor
