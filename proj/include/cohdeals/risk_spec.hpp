#pragma once

#include <cmath>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "cohdeals/errors.hpp"
#include "cohdeals/scenario.hpp"

namespace cohdeals {

// A RiskSpec is a symbolic description of a determining set of probability
// measures.  Specs are immutable values; nesting is by shared structure.

/// Tail V@R of order lambda: densities bounded by 1/lambda.
/// lambda = 1 is the singleton {P}; lambda = 0 is the essential infimum
/// (all densities).
struct TailVaR {
  double lambda;
};

struct WeightedVaRAtom {
  double lambda;  // in (0, 1]
  double weight;  // > 0
};

/// Spectral measure: a discrete mixture of Tail V@R orders.
struct WeightedVaR {
  std::vector<WeightedVaRAtom> atoms;  // weights sum to 1
};

/// Convex hull of explicitly listed densities.
struct Polytope {
  std::vector<Density> vertices;
};

class RiskSpec;
struct Mixture;
struct ConvHull;

class RiskSpec {
 public:
  enum class Kind { kTailVaR, kWeightedVaR, kPolytope, kMixture, kConvHull };

  static RiskSpec tail_var(double lambda);
  static RiskSpec weighted_var(std::vector<WeightedVaRAtom> atoms);
  static RiskSpec polytope(std::vector<Density> vertices);
  static RiskSpec mixture(std::vector<std::pair<double, RiskSpec>> terms);
  static RiskSpec conv_hull(std::vector<RiskSpec> specs);

  Kind kind() const;
  const TailVaR& as_tail_var() const;
  const WeightedVaR& as_weighted_var() const;
  const Polytope& as_polytope() const;
  const Mixture& as_mixture() const;
  const ConvHull& as_conv_hull() const;

  /// Space pinned by embedded densities, if any (nullptr for purely
  /// parametric specs).  Used to reject cross-space grounding.
  SpacePtr space_hint() const;

 private:
  struct Node;
  explicit RiskSpec(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Minkowski mixture sum(a_k * D_k) with positive weights summing to 1.
struct Mixture {
  std::vector<std::pair<double, RiskSpec>> terms;
};

/// Convex hull of the member determining sets.
struct ConvHull {
  std::vector<RiskSpec> specs;
};

struct RiskSpec::Node {
  std::variant<TailVaR, WeightedVaR, Polytope, Mixture, ConvHull> v;
};

inline RiskSpec RiskSpec::tail_var(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0) || !std::isfinite(lambda))
    throw DomainError("TailVaR: lambda must lie in [0,1]");
  return RiskSpec(std::make_shared<const Node>(Node{TailVaR{lambda}}));
}

inline RiskSpec RiskSpec::weighted_var(std::vector<WeightedVaRAtom> atoms) {
  if (atoms.empty()) throw StructuralError("WeightedVaR: no atoms");
  double wsum = 0.0;
  for (const auto& a : atoms) {
    if (!(a.lambda > 0.0 && a.lambda <= 1.0))
      throw DomainError("WeightedVaR: atom order must lie in (0,1]");
    if (!(a.weight > 0.0)) throw DomainError("WeightedVaR: atom weight must be positive");
    wsum += a.weight;
  }
  if (std::abs(wsum - 1.0) > 1e-12)
    throw DomainError("WeightedVaR: atom weights must sum to 1");
  return RiskSpec(std::make_shared<const Node>(Node{WeightedVaR{std::move(atoms)}}));
}

inline RiskSpec RiskSpec::polytope(std::vector<Density> vertices) {
  if (vertices.empty()) throw StructuralError("Polytope: no vertices");
  for (std::size_t i = 1; i < vertices.size(); ++i)
    require_same_space(vertices[0].space(), vertices[i].space(), "Polytope");
  return RiskSpec(std::make_shared<const Node>(Node{Polytope{std::move(vertices)}}));
}

inline RiskSpec RiskSpec::mixture(std::vector<std::pair<double, RiskSpec>> terms) {
  if (terms.empty()) throw StructuralError("Mixture: no terms");
  double wsum = 0.0;
  for (const auto& [w, spec] : terms) {
    (void)spec;
    if (!(w > 0.0)) throw DomainError("Mixture: weights must be positive");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > 1e-12) throw DomainError("Mixture: weights must sum to 1");
  return RiskSpec(std::make_shared<const Node>(Node{Mixture{std::move(terms)}}));
}

inline RiskSpec RiskSpec::conv_hull(std::vector<RiskSpec> specs) {
  if (specs.empty()) throw StructuralError("ConvHull: no member specs");
  return RiskSpec(std::make_shared<const Node>(Node{ConvHull{std::move(specs)}}));
}

inline RiskSpec::Kind RiskSpec::kind() const {
  switch (node_->v.index()) {
    case 0: return Kind::kTailVaR;
    case 1: return Kind::kWeightedVaR;
    case 2: return Kind::kPolytope;
    case 3: return Kind::kMixture;
    default: return Kind::kConvHull;
  }
}

inline const TailVaR& RiskSpec::as_tail_var() const { return std::get<TailVaR>(node_->v); }
inline const WeightedVaR& RiskSpec::as_weighted_var() const {
  return std::get<WeightedVaR>(node_->v);
}
inline const Polytope& RiskSpec::as_polytope() const { return std::get<Polytope>(node_->v); }
inline const Mixture& RiskSpec::as_mixture() const { return std::get<Mixture>(node_->v); }
inline const ConvHull& RiskSpec::as_conv_hull() const { return std::get<ConvHull>(node_->v); }

inline SpacePtr RiskSpec::space_hint() const {
  switch (kind()) {
    case Kind::kTailVaR:
    case Kind::kWeightedVaR:
      return nullptr;
    case Kind::kPolytope:
      return as_polytope().vertices.front().space();
    case Kind::kMixture: {
      for (const auto& [w, s] : as_mixture().terms) {
        (void)w;
        if (auto h = s.space_hint()) return h;
      }
      return nullptr;
    }
    case Kind::kConvHull: {
      for (const auto& s : as_conv_hull().specs)
        if (auto h = s.space_hint()) return h;
      return nullptr;
    }
  }
  return nullptr;
}

}  // namespace cohdeals
