#include "cayley/parabolic.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace cayley {

ParabolicData::ParabolicData(RootSystem rs, std::set<int> crossed)
    : rs_(std::move(rs)), crossed_(std::move(crossed)) {
  if (crossed_.empty()) {
    throw ConstructionError("parabolic needs a nonempty set of crossed nodes");
  }
  for (int c : crossed_) {
    if (c < 1 || c > rs_.rank()) {
      throw ConstructionError("crossed node " + std::to_string(c) + " out of range for " +
                              rs_.label());
    }
  }
  for (int i = 1; i <= rs_.rank(); ++i) {
    if (!crossed_.count(i)) levi_nodes_.push_back(i);
  }
  for (const Root& alpha : rs_.positive_roots()) {
    bool meets_crossed = false;
    for (int c : crossed_) {
      if (alpha.simple_coords[static_cast<std::size_t>(c - 1)] != 0) {
        meets_crossed = true;
        break;
      }
    }
    (meets_crossed ? nilradical_ : levi_positive_).push_back(alpha);
  }
  rho_levi_ = Weight::zero(rs_.rank());
  for (int i : levi_nodes_) rho_levi_.set_coeff(i, 1);
}

ParabolicData ParabolicData::parse(std::string_view label) {
  const std::size_t slash = label.find('/');
  if (slash == std::string_view::npos || slash + 2 > label.size() || label[slash + 1] != 'P') {
    throw ParseError("bad space label '" + std::string(label) + "', expected e.g. \"E6/P1\"");
  }
  RootSystem rs = build_root_system(label.substr(0, slash));
  int node = 0;
  const std::string_view digits = label.substr(slash + 2);
  if (digits.empty()) throw ParseError("missing node in space label '" + std::string(label) + "'");
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw ParseError("bad node '" + std::string(digits) + "' in space label '" +
                       std::string(label) + "'");
    }
    node = node * 10 + (ch - '0');
  }
  if (node < 1 || node > rs.rank()) {
    throw ParseError("node " + std::to_string(node) + " out of range in space label '" +
                     std::string(label) + "'");
  }
  return ParabolicData(std::move(rs), {node});
}

int ParabolicData::single_crossed_node() const {
  if (crossed_.size() != 1) {
    throw UnsupportedParabolicError("operation needs a maximal parabolic, but " + label() +
                                    " crosses " + std::to_string(crossed_.size()) + " nodes");
  }
  return *crossed_.begin();
}

std::string ParabolicData::label() const {
  std::ostringstream out;
  out << rs_.label() << "/P";
  bool first = true;
  for (int c : crossed_) {
    if (!first) out << ',';
    out << c;
    first = false;
  }
  return out.str();
}

namespace {

struct LeviComponent {
  char series;  // 'A', 'D' or 'E'
  int size;
};

// Classifies a connected simply-laced subdiagram by its arm structure.
LeviComponent classify_component(const RootSystem& rs, const std::vector<int>& nodes) {
  const std::set<int> in_comp(nodes.begin(), nodes.end());
  auto degree = [&](int v) {
    int d = 0;
    for (int nb : rs.neighbors(v)) {
      if (in_comp.count(nb)) ++d;
    }
    return d;
  };
  std::vector<int> branch;
  for (int v : nodes) {
    const int d = degree(v);
    if (d >= 3) branch.push_back(v);
    if (d >= 4) throw InternalError("Levi subdiagram has a degree-4 node");
  }
  const int n = static_cast<int>(nodes.size());
  if (branch.empty()) return {'A', n};
  if (branch.size() > 1) throw InternalError("Levi subdiagram has two branch nodes");
  // Arm lengths away from the unique branch node.
  std::vector<int> arms;
  for (int nb : rs.neighbors(branch[0])) {
    if (!in_comp.count(nb)) continue;
    int len = 0;
    int prev = branch[0];
    int cur = nb;
    while (true) {
      ++len;
      int next = 0;
      for (int w : rs.neighbors(cur)) {
        if (w != prev && in_comp.count(w)) {
          next = w;
          break;
        }
      }
      if (next == 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw InternalError("branch node without three arms");
  if (arms[0] == 1 && arms[1] == 1) return {'D', arms[2] + 3};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', arms[2] + 4};
  throw InternalError("Levi subdiagram is not of type A/D/E");
}

}  // namespace

Int ParabolicData::levi_weyl_order() const {
  // Connected components of the Levi subdiagram.
  std::set<int> remaining(levi_nodes_.begin(), levi_nodes_.end());
  Int order = 1;
  while (!remaining.empty()) {
    std::vector<int> comp;
    std::deque<int> queue{*remaining.begin()};
    remaining.erase(remaining.begin());
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (int nb : rs_.neighbors(v)) {
        auto it = remaining.find(nb);
        if (it != remaining.end()) {
          remaining.erase(it);
          queue.push_back(nb);
        }
      }
    }
    const LeviComponent c = classify_component(rs_, comp);
    SeriesType t = c.series == 'A' ? SeriesType::A : c.series == 'D' ? SeriesType::D : SeriesType::E;
    order *= build_root_system(t, c.size).weyl_order();
  }
  return order;
}

bool is_levi_dominant(const ParabolicData& p, const Weight& w) {
  for (int i : p.levi_nodes()) {
    if (w.coeff(i) < 0) return false;
  }
  return true;
}

void require_levi_dominant(const ParabolicData& p, const Weight& w) {
  for (int i : p.levi_nodes()) {
    if (w.coeff(i) < 0) {
      throw PreconditionError("weight " + w.to_string() + " is not L-dominant for " + p.label() +
                              ": negative coefficient at Levi node " + std::to_string(i));
    }
  }
}

Weight twist(const ParabolicData& p, const Weight& w, const Int& k) {
  const int c = p.single_crossed_node();
  Weight out = w;
  out.set_coeff(c, w.coeff(c) + k);
  return out;
}

Weight dual_weight(const ParabolicData& p, const Weight& w) {
  require_levi_dominant(p, w);
  return -levi_to_antidominant(p, w);
}

Weight canonical_weight(const ParabolicData& p) {
  Weight sum = Weight::zero(p.root_system().rank());
  for (const Root& alpha : p.nilradical_roots()) sum += alpha.weight;
  return -sum;
}

ChamberResult levi_to_dominant(const ParabolicData& p, Weight w, WalkTrace* trace) {
  return detail::chamber_walk(p.root_system(), std::move(w), p.levi_nodes(), WalkOptions{}, trace);
}

Weight levi_to_antidominant(const ParabolicData& p, Weight w) {
  return detail::antidominant_walk(p.root_system(), std::move(w), p.levi_nodes());
}

}  // namespace cayley
