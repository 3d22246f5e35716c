#include "sgcor/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "sgcor/elliptic.hpp"
#include "sgcor/kernels.hpp"
#include "sgcor/summation.hpp"

namespace sgcor {

namespace {

constexpr double kPi = std::numbers::pi;

template <class F>
double sample_mean(std::size_t n, F&& f) {
  NeumaierSum s;
  for (std::size_t i = 0; i < n; ++i) s.add(f(i));
  return s.value() / static_cast<double>(n);
}

void require_at_least_three(const BivariateSample& sample) {
  if (sample.size() < 3) {
    throw Error(ErrorCode::TooFewPoints, "asymptotic variance plug-ins need n >= 3");
  }
}

AsvEstimate plug_in(Estimator e, double value) {
  return {e, std::max(value, 0.0), AsvMethod::plug_in, false};
}

AsvEstimate closed(Estimator e, double value) {
  return {e, std::max(value, 0.0), AsvMethod::closed_form, false};
}

void require_rho(double rho) {
  if (!std::isfinite(rho) || std::abs(rho) > 1.0) {
    throw Error(ErrorCode::DomainError, "rho must lie in [-1, 1]");
  }
}

}  // namespace

std::string_view to_string(AsvMethod m) {
  return m == AsvMethod::plug_in ? "plug_in" : "closed_form";
}

MomentSet MomentSet::from_sample(const BivariateSample& sample) {
  const auto xs = sample.xs();
  const auto ys = sample.ys();
  const std::size_t n = sample.size();
  MomentSet m;
  m.mean_x = sample_mean(n, [&](std::size_t i) { return xs[i]; });
  m.mean_y = sample_mean(n, [&](std::size_t i) { return ys[i]; });
  NeumaierSum s20, s02, s11, s22, s40, s04, s31, s13;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - m.mean_x;
    const double dy = ys[i] - m.mean_y;
    const double xx = dx * dx, yy = dy * dy;
    s20.add(xx);
    s02.add(yy);
    s11.add(dx * dy);
    s22.add(xx * yy);
    s40.add(xx * xx);
    s04.add(yy * yy);
    s31.add(xx * dx * dy);
    s13.add(dx * dy * yy);
  }
  const auto nn = static_cast<double>(n);
  m.s20 = s20.value() / nn;
  m.s02 = s02.value() / nn;
  m.s11 = s11.value() / nn;
  m.s22 = s22.value() / nn;
  m.s40 = s40.value() / nn;
  m.s04 = s04.value() / nn;
  m.s31 = s31.value() / nn;
  m.s13 = s13.value() / nn;
  return m;
}

MomentSet MomentSet::normal(double rho) {
  require_rho(rho);
  MomentSet m;
  m.s11 = rho;
  m.s22 = 1.0 + 2.0 * rho * rho;
  m.s31 = 3.0 * rho;
  m.s13 = 3.0 * rho;
  return m;
}

void MomentSet::validate() const {
  if (!(s20 > 0.0) || !(s02 > 0.0)) {
    throw Error(ErrorCode::DomainError, "variances must be positive");
  }
}

double MomentSet::correlation() const { return s11 / std::sqrt(s20 * s02); }

RhoGInfluence::RhoGInfluence(const BivariateSample& sample)
    : sample_(sample), rows_(kernels::spatial_rows(sample.xs(), sample.ys())) {
  require_nonconstant(sample_);
  const std::size_t n = sample_.size();
  t1_ = 0.5 * sample_mean(n, [&](std::size_t i) { return rows_.l1[i]; });
  t2_ = 0.5 * sample_mean(n, [&](std::size_t i) { return rows_.l2[i]; });
  t3_ = 0.5 * sample_mean(n, [&](std::size_t i) { return rows_.l3[i]; });
  rho_g_ = symmetric_gini(GiniComponents{t1_, t2_, t3_}).value;
  at_sample_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    at_sample_[i] = combine(rows_.l1[i], rows_.l2[i], rows_.l3[i]);
  }
}

double RhoGInfluence::combine(double l1, double l2, double l3) const {
  return -0.5 * (rho_g_ * l1 / t1_ - 2.0 * l2 / std::sqrt(t1_ * t3_) + rho_g_ * l3 / t3_);
}

double RhoGInfluence::operator()(const Point2& point) const {
  NeumaierSum l1, l2, l3;
  const auto xs = sample_.xs();
  const auto ys = sample_.ys();
  for (std::size_t i = 0; i < sample_.size(); ++i) {
    const double dx = point[0] - xs[i];
    const double dy = point[1] - ys[i];
    if (dx == 0.0 && dy == 0.0) continue;
    const double w = 2.0 / std::hypot(dx, dy);
    l1.add(w * dx * dx);
    l2.add(w * dx * dy);
    l3.add(w * dy * dy);
  }
  const auto n = static_cast<double>(sample_.size());
  return combine(l1.value() / n, l2.value() / n, l3.value() / n);
}

double influence_rho_g(const Point2& point, const BivariateSample& sample) {
  return RhoGInfluence(sample)(point);
}

double influence_pearson(const Point2& point, const MomentSet& m) {
  m.validate();
  const double sx = std::sqrt(m.s20);
  const double sy = std::sqrt(m.s02);
  const double u = (point[0] - m.mean_x) / sx;
  const double v = (point[1] - m.mean_y) / sy;
  return u * v - 0.5 * m.correlation() * (u * u + v * v);
}

double influence_kendall(const Point2& point, const BivariateSample& sample) {
  const auto c = kernels::concordance(sample.xs(), sample.ys());
  const double tau = static_cast<double>(c.score) / static_cast<double>(c.pairs);
  const auto xs = sample.xs();
  const auto ys = sample.ys();
  std::size_t concordant = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if ((point[0] - xs[i]) * (point[1] - ys[i]) > 0.0) ++concordant;
  }
  const double p = static_cast<double>(concordant) / static_cast<double>(sample.size());
  return 2.0 * (2.0 * p - 1.0 - tau);
}

AsvEstimate asv_symmetric_gini(const BivariateSample& sample) {
  require_at_least_three(sample);
  const RhoGInfluence influence(sample);
  const auto& f = influence.at_sample();
  return plug_in(Estimator::symmetric_gini,
                 sample_mean(f.size(), [&](std::size_t i) { return f[i] * f[i]; }));
}

double asv_symmetric_gini_expanded(const BivariateSample& sample) {
  require_at_least_three(sample);
  const RhoGInfluence influence(sample);
  const double t1 = influence.t1(), t2 = influence.t2(), t3 = influence.t3();
  if (t2 == 0.0) throw Error(ErrorCode::DomainError, "expanded form needs rho_g != 0");
  const auto& r = influence.rows();
  const std::size_t n = sample.size();
  const auto e = [&](const std::vector<double>& a, const std::vector<double>& b) {
    return sample_mean(n, [&](std::size_t i) { return a[i] * b[i]; });
  };
  const double rho = influence.rho_g();
  return 0.25 * rho * rho *
         (e(r.l1, r.l1) / (t1 * t1) + 4.0 * e(r.l2, r.l2) / (t2 * t2) +
          e(r.l3, r.l3) / (t3 * t3) - 4.0 * e(r.l1, r.l2) / (t1 * t2) +
          2.0 * e(r.l1, r.l3) / (t1 * t3) - 4.0 * e(r.l2, r.l3) / (t2 * t3));
}

AsvEstimate asv_corrected(const BivariateSample& sample) {
  const AsvEstimate vg = asv_symmetric_gini(sample);
  const double rho = corrected_symmetric_gini(sample).value;
  if (std::abs(rho) >= 1.0) {
    throw Error(ErrorCode::DomainError, "k'(rho) undefined at |rho| = 1");
  }
  const double kp = k_derivative(rho);
  return plug_in(Estimator::corrected_symmetric_gini, vg.value / (kp * kp));
}

AsvEstimate asv_pearson(const MomentSet& m, const std::optional<EllipticalModelSpec>& model) {
  m.validate();
  const double rho = m.correlation();
  const double sd = std::sqrt(m.s20 * m.s02);
  // rho^2 s31 / (s11 s20) rewritten as rho s31 / (s20 sd): finite at rho = 0.
  const double v = (1.0 + 0.5 * rho * rho) * m.s22 / (m.s20 * m.s02) +
                   0.25 * rho * rho * (m.s40 / (m.s20 * m.s20) + m.s04 / (m.s02 * m.s02)) -
                   rho * m.s31 / (m.s20 * sd) - rho * m.s13 / (m.s02 * sd);
  AsvEstimate out = plug_in(Estimator::pearson, v);
  out.heavy_tail_warning =
      model.has_value() && model->family == Family::student_t && model->nu <= 4.0;
  return out;
}

AsvEstimate asv_pearson(const BivariateSample& sample,
                        const std::optional<EllipticalModelSpec>& model) {
  require_nonconstant(sample);
  return asv_pearson(MomentSet::from_sample(sample), model);
}

AsvEstimate asv_regular_gini(const BivariateSample& sample, GiniDirection direction) {
  require_at_least_three(sample);
  require_nonconstant(sample);
  const bool xy = direction == GiniDirection::xy;
  const auto rows = xy ? kernels::gini_rows(sample.xs(), sample.ys())
                       : kernels::gini_rows(sample.ys(), sample.xs());
  const std::size_t n = sample.size();
  const auto& g1 = rows.h1;
  const auto& g2 = rows.h2;
  const double th1 = sample_mean(n, [&](std::size_t i) { return g1[i]; });
  const double th2 = sample_mean(n, [&](std::size_t i) { return g2[i]; });
  const double z1 = sample_mean(n, [&](std::size_t i) { return g1[i] * g1[i]; }) - th1 * th1;
  const double z2 = sample_mean(n, [&](std::size_t i) { return g2[i] * g2[i]; }) - th2 * th2;
  const double z3 = sample_mean(n, [&](std::size_t i) { return g1[i] * g2[i]; }) - th1 * th2;
  const double th2_2 = th2 * th2;
  const double v = 4.0 * z1 / th2_2 + 4.0 * th1 * th1 * z2 / (th2_2 * th2_2) -
                   8.0 * th1 * z3 / (th2_2 * th2);
  return plug_in(xy ? Estimator::gini_xy : Estimator::gini_yx, v);
}

AsvEstimate asv_tau_rho(const BivariateSample& sample) {
  require_at_least_three(sample);
  require_nonconstant(sample);
  const auto g = kernels::concordance_rows(sample.xs(), sample.ys());
  const std::size_t n = g.size();
  const double mean_g = sample_mean(n, [&](std::size_t i) { return g[i]; });
  const double mean_g2 = sample_mean(n, [&](std::size_t i) { return g[i] * g[i]; });
  const double v_tau = 4.0 * mean_g2 - 4.0 * mean_g * mean_g;
  const double rho = std::sin(0.5 * kPi * mean_g);
  return plug_in(Estimator::tau_to_rho, 0.25 * kPi * kPi * (1.0 - rho * rho) * v_tau);
}

double are(const AsvEstimate& asv_a, const AsvEstimate& asv_b) {
  if (!(asv_a.value > 0.0)) {
    throw Error(ErrorCode::DomainError, "ARE needs a positive reference variance");
  }
  return asv_b.value / asv_a.value;
}

namespace normal_closed_form {

AsvEstimate asv_pearson(double rho) {
  require_rho(rho);
  const double a = 1.0 - rho * rho;
  return closed(Estimator::pearson, a * a);
}

AsvEstimate asv_regular_gini(double rho) {
  require_rho(rho);
  const double r2 = rho * rho;
  const double v = kPi / 3.0 + (kPi / 3.0 + 4.0 * std::sqrt(3.0)) * r2 -
                   4.0 * rho * std::asin(0.5 * rho) - 4.0 * r2 * std::sqrt(4.0 - r2);
  return closed(Estimator::gini_xy, v);
}

AsvEstimate asv_tau_rho(double rho) {
  require_rho(rho);
  const double a = std::asin(0.5 * rho);
  const double v = kPi * kPi * (1.0 - rho * rho) * (1.0 / 9.0 - 4.0 / (kPi * kPi) * a * a);
  return closed(Estimator::tau_to_rho, v);
}

}  // namespace normal_closed_form

}  // namespace sgcor
