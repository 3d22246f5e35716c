#include "sgcor/sampling.hpp"

#include <cmath>
#include <numbers>
#include <tuple>

#include "sgcor/affine.hpp"

namespace sgcor {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::seed_seq make_seed(const RngStream& s) {
  const auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
  const auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  return std::seed_seq{lo(s.master_seed), hi(s.master_seed), lo(s.stream_id), hi(s.stream_id)};
}

}  // namespace

RngStream RngStream::substream(std::uint64_t k) const {
  return {master_seed, splitmix64(stream_id ^ splitmix64(k ^ 0xd1b54a32d192ed03ULL))};
}

Rng::Rng(const RngStream& stream) {
  auto seq = make_seed(stream);
  engine_.seed(seq);
}

double Rng::uniform() {
  // 53 random bits, shifted by half an ulp so 0 is excluded.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

std::pair<double, double> Rng::normal_pair() {
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

double Rng::gamma(double shape) {
  if (!(shape > 0.0)) throw Error(ErrorCode::DomainError, "gamma shape must be positive");
  if (shape < 1.0) {
    // Gamma(a) = Gamma(a + 1) U^{1/a}
    const double g = gamma(shape + 1.0);
    return g * std::pow(uniform(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal_pair().first;
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

std::vector<Point2> draw_elliptical(const EllipticalModelSpec& spec, std::size_t n,
                                    const RngStream& stream) {
  if (n == 0) throw Error(ErrorCode::DomainError, "sample size must be positive");
  spec.validate();
  const ScatterMatrix2 root = spd_sqrt(spec.sigma);
  Rng rng(stream);
  std::vector<Point2> out(n);
  for (auto& z : out) {
    double w1 = 0.0, w2 = 0.0;
    switch (spec.family) {
      case Family::normal: {
        std::tie(w1, w2) = rng.normal_pair();
        break;
      }
      case Family::student_t: {
        std::tie(w1, w2) = rng.normal_pair();
        const double scale = std::sqrt(spec.nu / rng.chi_squared(spec.nu));
        w1 *= scale;
        w2 *= scale;
        break;
      }
      case Family::kotz: {
        // Gamma(2, 1) as a sum of two unit exponentials.
        const double r = -std::log(rng.uniform()) - std::log(rng.uniform());
        const double theta = 2.0 * std::numbers::pi * rng.uniform();
        w1 = r * std::cos(theta);
        w2 = r * std::sin(theta);
        break;
      }
    }
    z[0] = spec.mu[0] + root.g11() * w1 + root.g12() * w2;
    z[1] = spec.mu[1] + root.g12() * w1 + root.g22() * w2;
  }
  return out;
}

BivariateSample sample_elliptical(const EllipticalModelSpec& spec, std::size_t n,
                                  const RngStream& stream) {
  const auto points = draw_elliptical(spec, n, stream);
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = points[i][0];
    ys[i] = points[i][1];
  }
  return validate_sample(xs, ys);
}

}  // namespace sgcor
