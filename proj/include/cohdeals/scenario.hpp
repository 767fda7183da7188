#pragma once

#include <cmath>
#include <memory>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cohdeals/errors.hpp"
#include "cohdeals/numerics.hpp"

namespace cohdeals {

/// A finite outcome set with strictly positive reference probabilities.
/// Spaces are immutable after construction; random variables and densities
/// reference their space by identity and cross-space operations are rejected
/// rather than coerced.
class ScenarioSpace {
 public:
  static std::shared_ptr<const ScenarioSpace> create(std::vector<std::string> labels,
                                                     std::vector<double> probs) {
    return std::shared_ptr<const ScenarioSpace>(
        new ScenarioSpace(std::move(labels), std::move(probs)));
  }

  static std::shared_ptr<const ScenarioSpace> from_probs(std::vector<double> probs) {
    std::vector<std::string> labels(probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i) labels[i] = "w" + std::to_string(i);
    return create(std::move(labels), std::move(probs));
  }

  static std::shared_ptr<const ScenarioSpace> uniform(std::size_t n) {
    return from_probs(std::vector<double>(n, 1.0 / static_cast<double>(n)));
  }

  std::size_t size() const { return probs_.size(); }
  const std::vector<double>& probs() const { return probs_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  ScenarioSpace(std::vector<std::string> labels, std::vector<double> probs)
      : labels_(std::move(labels)), probs_(std::move(probs)) {
    if (probs_.empty()) throw StructuralError("ScenarioSpace: no outcomes");
    if (labels_.size() != probs_.size())
      throw StructuralError("ScenarioSpace: labels/probs length mismatch");
    double sum = 0.0;
    for (double p : probs_) {
      if (!(p > 0.0) || !std::isfinite(p))
        throw StructuralError("ScenarioSpace: probabilities must be strictly positive");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw StructuralError("ScenarioSpace: probabilities must sum to 1");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
      if (!seen.insert(l).second)
        throw StructuralError("ScenarioSpace: duplicate outcome label '" + l + "'");
    }
  }

  std::vector<std::string> labels_;
  std::vector<double> probs_;
};

using SpacePtr = std::shared_ptr<const ScenarioSpace>;

inline void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* what) {
  if (a.get() != b.get())
    throw StructuralError(std::string(what) + ": operands live on different scenario spaces");
}

/// A discounted P&L / payoff: one real value per outcome.
class Pnl {
 public:
  Pnl(SpacePtr space, std::vector<double> values)
      : space_(std::move(space)), values_(std::move(values)) {
    if (!space_) throw StructuralError("Pnl: null space");
    if (values_.size() != space_->size())
      throw StructuralError("Pnl: value count does not match outcome count");
    for (double v : values_)
      if (!std::isfinite(v)) throw StructuralError("Pnl: non-finite entry");
  }

  const SpacePtr& space() const { return space_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  friend Pnl operator+(const Pnl& a, const Pnl& b) {
    require_same_space(a.space_, b.space_, "Pnl+Pnl");
    std::vector<double> out(a.values_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.values_[i];
    return Pnl(a.space_, std::move(out));
  }
  friend Pnl operator-(const Pnl& a, const Pnl& b) {
    require_same_space(a.space_, b.space_, "Pnl-Pnl");
    std::vector<double> out(a.values_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.values_[i];
    return Pnl(a.space_, std::move(out));
  }
  friend Pnl operator*(double c, const Pnl& a) {
    std::vector<double> out(a.values_);
    for (double& v : out) v *= c;
    return Pnl(a.space_, std::move(out));
  }
  friend Pnl operator+(const Pnl& a, double m) {
    std::vector<double> out(a.values_);
    for (double& v : out) v += m;
    return Pnl(a.space_, std::move(out));
  }
  friend Pnl operator-(const Pnl& a) { return -1.0 * a; }

 private:
  SpacePtr space_;
  std::vector<double> values_;
};

/// A density dQ/dP: nonnegative per-outcome weights integrating to one
/// against the reference probabilities.
class Density {
 public:
  Density(SpacePtr space, std::vector<double> z)
      : space_(std::move(space)), z_(std::move(z)) {
    if (!space_) throw StructuralError("Density: null space");
    if (z_.size() != space_->size())
      throw StructuralError("Density: entry count does not match outcome count");
    double mass = 0.0;
    const auto& p = space_->probs();
    for (std::size_t i = 0; i < z_.size(); ++i) {
      if (!std::isfinite(z_[i])) throw StructuralError("Density: non-finite entry");
      if (z_[i] < -kFeasTol) throw StructuralError("Density: negative entry");
      if (z_[i] < 0.0) z_[i] = 0.0;  // clamp solver dust
      mass += p[i] * z_[i];
    }
    if (std::abs(mass - 1.0) > 1e-9)
      throw StructuralError("Density: does not integrate to 1 against P");
  }

  const SpacePtr& space() const { return space_; }
  const std::vector<double>& z() const { return z_; }
  double operator[](std::size_t i) const { return z_[i]; }
  /// Probability the measure assigns to outcome i.
  double measure(std::size_t i) const { return space_->probs()[i] * z_[i]; }

 private:
  SpacePtr space_;
  std::vector<double> z_;
};

/// E_P X.
inline double expectation(const Pnl& x) {
  const auto& p = x.space()->probs();
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) acc += p[i] * x[i];
  return acc;
}

/// E_Q X for Q given by its density.
inline double expectation(const Density& q, const Pnl& x) {
  require_same_space(q.space(), x.space(), "expectation");
  const auto& p = x.space()->probs();
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) acc += p[i] * q[i] * x[i];
  return acc;
}

}  // namespace cohdeals
