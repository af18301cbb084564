#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/error.hpp"

namespace cayley {

/// Exact integer type used for all coefficients, multiplicities and dimensions.
/// Nothing in the toolkit is allowed to overflow silently.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, used transiently inside dimension formulas.
using Rational = boost::multiprecision::cpp_rational;

/// A weight in fundamental-weight coordinates (Dynkin labels).
///
/// Node indices are 1-based everywhere in the public API, matching the
/// Bourbaki labels used in the rest of the toolkit. The coefficient at node
/// i is the pairing with the simple coroot, <lambda, alpha_i^vee>.
class Weight {
public:
  Weight() = default;
  explicit Weight(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {}

  static Weight zero(int rank) { return Weight(std::vector<Int>(static_cast<std::size_t>(rank))); }

  /// The fundamental weight omega_node.
  static Weight fundamental(int rank, int node);

  int rank() const { return static_cast<int>(coeffs_.size()); }

  const Int& coeff(int node) const;
  void set_coeff(int node, Int value);

  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Int& scalar);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Int& scalar, Weight w) { return w *= scalar; }
  friend Weight operator-(Weight a);

  friend bool operator==(const Weight& a, const Weight& b) = default;
  // Lexicographic order on coefficients; used for deterministic map keys.
  friend bool operator<(const Weight& a, const Weight& b) { return a.coeffs_ < b.coeffs_; }

  /// Comma-separated Dynkin labels, e.g. "-3,0,0,0,0,6".
  std::string to_string() const;

  /// Parses the comma-separated format. Accepts an ASCII '-' or a UTF-8
  /// minus sign; the coefficient count must equal `rank`.
  static Weight parse(std::string_view text, int rank);

private:
  void check_node(int node) const;

  std::vector<Int> coeffs_;
};

/// Renders a weight as a sum of fundamental weights, e.g. "ω5+2ω6",
/// "-ω1+ω3", or "0". Used by the CLI and the report.
std::string omega_string(const Weight& w);

}  // namespace cayley
