#include "atomdeconv/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "atomdeconv/errors.hpp"

namespace atomdeconv {

namespace {

constexpr double kPi = std::numbers::pi;

double normal_density(double v, const ModelSpec::Normal& n) {
  const double z = v - n.mean;
  return std::exp(-0.5 * z * z / n.variance) / std::sqrt(2.0 * kPi * n.variance);
}

std::complex<double> normal_cf(double t, const ModelSpec::Normal& n) {
  return std::exp(std::complex<double>(-0.5 * n.variance * t * t, n.mean * t));
}

}  // namespace

ModelSpec::ModelSpec(double p, Family family, double sigma)
    : p_(p), family_(std::move(family)), sigma_(sigma) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw std::invalid_argument("ModelSpec: p must lie in [0, 1)");
  }
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("ModelSpec: sigma must be finite and >= 0");
  }
  if (const auto* n = std::get_if<Normal>(&family_)) {
    if (!(n->variance > 0.0)) throw std::invalid_argument("ModelSpec: variance must be > 0");
  } else if (const auto* g = std::get_if<Gamma>(&family_)) {
    if (!(g->shape >= 1.0)) {
      throw std::invalid_argument("ModelSpec: gamma shape must be >= 1");
    }
  } else if (const auto* m = std::get_if<NormalMixture>(&family_)) {
    if (!(m->weight1 > 0.0 && m->weight1 < 1.0)) {
      throw std::invalid_argument("ModelSpec: mixture weight must lie in (0, 1)");
    }
    if (!(m->component1.variance > 0.0 && m->component2.variance > 0.0)) {
      throw std::invalid_argument("ModelSpec: variance must be > 0");
    }
  }
}

ModelSpec ModelSpec::normal(double p, double mean, double variance, double sigma) {
  return ModelSpec(p, Normal{mean, variance}, sigma);
}

ModelSpec ModelSpec::gamma(double p, double shape, double sigma) {
  return ModelSpec(p, Gamma{shape}, sigma);
}

ModelSpec ModelSpec::normal_mixture(double p, double weight1, Normal c1, Normal c2,
                                    double sigma) {
  return ModelSpec(p, NormalMixture{weight1, c1, c2}, sigma);
}

std::string ModelSpec::family_name() const {
  if (std::holds_alternative<Normal>(family_)) return "normal";
  if (std::holds_alternative<Gamma>(family_)) return "gamma";
  return "mixture";
}

double ModelSpec::density(double v) const {
  if (const auto* n = std::get_if<Normal>(&family_)) {
    return normal_density(v, *n);
  }
  if (const auto* g = std::get_if<Gamma>(&family_)) {
    if (v <= 0.0) return 0.0;
    return std::exp((g->shape - 1.0) * std::log(v) - v - std::lgamma(g->shape));
  }
  const auto& m = std::get<NormalMixture>(family_);
  return m.weight1 * normal_density(v, m.component1) +
         (1.0 - m.weight1) * normal_density(v, m.component2);
}

std::complex<double> ModelSpec::cf(double t) const {
  if (const auto* n = std::get_if<Normal>(&family_)) {
    return normal_cf(t, *n);
  }
  if (const auto* g = std::get_if<Gamma>(&family_)) {
    // (1 - i t)^(-shape)
    return std::pow(std::complex<double>(1.0, -t), -g->shape);
  }
  const auto& m = std::get<NormalMixture>(family_);
  return m.weight1 * normal_cf(t, m.component1) +
         (1.0 - m.weight1) * normal_cf(t, m.component2);
}

double ModelSpec::mean_v() const {
  if (const auto* n = std::get_if<Normal>(&family_)) return n->mean;
  if (const auto* g = std::get_if<Gamma>(&family_)) return g->shape;
  const auto& m = std::get<NormalMixture>(family_);
  return m.weight1 * m.component1.mean + (1.0 - m.weight1) * m.component2.mean;
}

double ModelSpec::var_v() const {
  if (const auto* n = std::get_if<Normal>(&family_)) return n->variance;
  if (const auto* g = std::get_if<Gamma>(&family_)) return g->shape;
  const auto& m = std::get<NormalMixture>(family_);
  const double mean = mean_v();
  auto second = [](const Normal& c) { return c.variance + c.mean * c.mean; };
  const double ev2 =
      m.weight1 * second(m.component1) + (1.0 - m.weight1) * second(m.component2);
  return ev2 - mean * mean;
}

double ModelSpec::var_y() const { return (1.0 - p_) * (var_v() + p_ * mean_v() * mean_v()); }

std::pair<double, double> ModelSpec::support_hint() const {
  if (const auto* n = std::get_if<Normal>(&family_)) {
    const double spread = 13.0 * std::sqrt(n->variance);
    return {n->mean - spread, n->mean + spread};
  }
  if (const auto* g = std::get_if<Gamma>(&family_)) {
    // exp(-v) v^(shape-1) < 1e-30 before shape + 20 sqrt(shape) + 40
    return {0.0, g->shape + 20.0 * std::sqrt(g->shape) + 40.0};
  }
  const auto& m = std::get<NormalMixture>(family_);
  const double s1 = 13.0 * std::sqrt(m.component1.variance);
  const double s2 = 13.0 * std::sqrt(m.component2.variance);
  return {std::min(m.component1.mean - s1, m.component2.mean - s2),
          std::max(m.component1.mean + s1, m.component2.mean + s2)};
}

double ModelSpec::cf_cutoff(double eps) const {
  if (const auto* n = std::get_if<Normal>(&family_)) {
    return std::sqrt(2.0 * std::log(1.0 / eps) / n->variance);
  }
  if (const auto* g = std::get_if<Gamma>(&family_)) {
    // |cf| = (1 + t^2)^(-shape/2)
    return std::sqrt(std::pow(eps, -2.0 / g->shape));
  }
  const auto& m = std::get<NormalMixture>(family_);
  const double vmin = std::min(m.component1.variance, m.component2.variance);
  return std::sqrt(2.0 * std::log(1.0 / eps) / vmin);
}

double nsr(const ModelSpec& model) {
  const double var_y = model.var_y();
  if (!(var_y > 0.0)) {
    throw DegenerateModel("nsr: Var[Y] = 0 for this model");
  }
  return 100.0 * model.sigma() * model.sigma() / var_y;
}

}  // namespace atomdeconv
