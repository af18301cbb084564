#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/root_system.hpp"

namespace cayley {

/// A root system together with a nonempty set of crossed nodes. Induces the
/// Levi sub-root-system (roots supported on the uncrossed nodes), the
/// nilradical (everything else), L-dominance, twisting and duality.
/// Immutable after construction.
class ParabolicData {
public:
  ParabolicData(RootSystem rs, std::set<int> crossed);

  /// Parses labels like "E6/P1", "A3/P2", "D5/P1".
  static ParabolicData parse(std::string_view label);

  const RootSystem& root_system() const { return rs_; }
  const std::set<int>& crossed() const { return crossed_; }
  const std::vector<int>& levi_nodes() const { return levi_nodes_; }
  bool is_crossed(int node) const { return crossed_.count(node) > 0; }

  /// Positive roots with support meeting a crossed node.
  const std::vector<Root>& nilradical_roots() const { return nilradical_; }
  /// Positive roots supported on the Levi nodes only.
  const std::vector<Root>& levi_positive_roots() const { return levi_positive_; }

  /// Sum of the fundamental weights over the Levi nodes.
  const Weight& rho_levi() const { return rho_levi_; }

  /// The crossed node of a maximal parabolic; throws otherwise.
  int single_crossed_node() const;

  std::string label() const;

  /// Order of the Levi Weyl group, via classification of the connected
  /// components of the Levi subdiagram.
  Int levi_weyl_order() const;

private:
  RootSystem rs_;
  std::set<int> crossed_;
  std::vector<int> levi_nodes_;
  std::vector<Root> nilradical_;
  std::vector<Root> levi_positive_;
  Weight rho_levi_;
};

/// True iff every Levi coefficient of `w` is >= 0 (crossed nodes are free).
bool is_levi_dominant(const ParabolicData& p, const Weight& w);
/// Throws PreconditionError naming the offending node.
void require_levi_dominant(const ParabolicData& p, const Weight& w);

/// w + k * omega_c for the single crossed node c. Maximal parabolics only.
Weight twist(const ParabolicData& p, const Weight& w, const Int& k);

/// Highest weight of the dual Levi module, -w0^L(w), computed in the ambient
/// lattice: reflect at Levi nodes until the Levi part is antidominant, then
/// negate. Involutive on L-dominant weights.
Weight dual_weight(const ParabolicData& p, const Weight& w);

/// Weight of the canonical bundle: minus the sum of the nilradical roots.
Weight canonical_weight(const ParabolicData& p);

/// Chamber walk using only Levi reflections; singular means a zero Levi
/// coefficient. Crossed coefficients ride along and keep track of the
/// central character.
ChamberResult levi_to_dominant(const ParabolicData& p, Weight w, WalkTrace* trace = nullptr);
Weight levi_to_antidominant(const ParabolicData& p, Weight w);

}  // namespace cayley
