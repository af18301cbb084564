#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cayley/weight.hpp"

namespace cayley {

enum class SeriesType { A, D, E };

/// A positive root, held both in fundamental-weight coordinates and as its
/// expansion over the simple roots. In the simply-laced normalization the
/// pairing <w, alpha^vee> is the dot product of `simple_coords` with the
/// Dynkin labels of w.
struct Root {
  Weight weight;
  std::vector<Int> simple_coords;  // index 0 = node 1

  Int height() const;
  friend bool operator==(const Root&, const Root&) = default;
};

/// Exact Cartan data for a simply-laced root system (A_n, D_n, E6/E7/E8),
/// immutable after construction and safe to share across threads.
class RootSystem {
public:
  SeriesType series() const { return series_; }
  int rank() const { return rank_; }
  std::string label() const;

  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const Weight& rho() const { return rho_; }

  /// Dynkin-diagram neighbours of `node` (1-based).
  const std::vector<int>& neighbors(int node) const;
  /// All nodes, 1..rank. Handy as the active set of a full chamber walk.
  const std::vector<int>& all_nodes() const { return all_nodes_; }

  /// Order of the Weyl group, from the classical product formulas.
  Int weyl_order() const;

private:
  friend RootSystem build_root_system(SeriesType, int);

  SeriesType series_ = SeriesType::A;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Weight> simple_roots_;
  std::vector<Root> positive_roots_;
  Weight rho_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<int> all_nodes_;
};

/// Builds the Cartan matrix and closes the simple roots into the full set of
/// positive roots. Valid pairs: A_n (n>=1), D_n (n>=4), E6/E7/E8.
RootSystem build_root_system(SeriesType type, int rank);
/// Same, from a label like "E6", "A3", "D5".
RootSystem build_root_system(std::string_view label);

/// Result of a chamber walk: the input was singular (hit a wall), or reached
/// the strictly dominant chamber after `length` simple reflections.
class ChamberResult {
public:
  static ChamberResult singular() { return ChamberResult(); }
  static ChamberResult regular(int length, Weight dominant) {
    ChamberResult r;
    r.regular_ = true;
    r.length_ = length;
    r.dominant_ = std::move(dominant);
    return r;
  }

  bool is_singular() const { return !regular_; }
  bool is_regular() const { return regular_; }
  int length() const;
  const Weight& dominant() const;

  friend bool operator==(const ChamberResult&, const ChamberResult&) = default;

private:
  bool regular_ = false;
  int length_ = 0;
  Weight dominant_;
};

/// Which negative node a chamber walk reflects at when several qualify.
/// The outcome is provably independent of the choice; exposing it lets the
/// test suite verify that instead of assuming it.
enum class TieBreak { smallest_index, largest_index, seeded_random };

struct WalkOptions {
  TieBreak tie_break = TieBreak::smallest_index;
  std::uint64_t seed = 0;
};

/// Reflection-by-reflection record of a chamber walk: (node, weight after).
struct WalkTrace {
  Weight start;
  std::vector<std::pair<int, Weight>> steps;
};

/// s_i(w) = w - <w, alpha_i^vee> alpha_i. In the simply-laced fundamental
/// basis: negate coefficient i and add its old value to each Dynkin
/// neighbour of i.
Weight simple_reflection(const RootSystem& rs, const Weight& w, int node);

/// Walks `w` toward the dominant chamber by reflecting at negative
/// coefficients. A zero coefficient at any point means the weight is
/// singular. For regular weights the number of reflections is the length of
/// the unique Weyl element mapping `w` into the open dominant chamber.
ChamberResult to_dominant(const RootSystem& rs, Weight w, const WalkOptions& options = {},
                          WalkTrace* trace = nullptr);

/// Walks `w` to the unique antidominant representative of its orbit
/// (all coefficients <= 0). Does not stop at walls.
Weight to_antidominant(const RootSystem& rs, Weight w);

/// Weyl dimension formula, exact: prod <lambda+rho, a^vee> / <rho, a^vee>.
/// Requires lambda dominant.
Int weyl_dimension(const RootSystem& rs, const Weight& lambda);

/// The full Weyl orbit of `w`, by breadth-first closure under all simple
/// reflections.
std::set<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);

/// -w0 applied to a dominant weight: the highest weight of the dual module.
Weight full_dual_dominant(const RootSystem& rs, const Weight& dominant);

namespace detail {

/// Chamber walk restricted to `active` nodes; singularity means a zero
/// coefficient at an active node. Shared by the full and the Levi walks.
ChamberResult chamber_walk(const RootSystem& rs, Weight w, std::span<const int> active,
                           const WalkOptions& options, WalkTrace* trace);

/// Reflects at active nodes with positive coefficient until none is left.
Weight antidominant_walk(const RootSystem& rs, Weight w, std::span<const int> active);

}  // namespace detail

}  // namespace cayley
