#include "cayley/weight.hpp"

#include <sstream>

namespace cayley {

Weight Weight::fundamental(int rank, int node) {
  Weight w = zero(rank);
  w.set_coeff(node, 1);
  return w;
}

void Weight::check_node(int node) const {
  if (node < 1 || node > rank()) {
    throw PreconditionError("node index " + std::to_string(node) + " out of range 1.." +
                            std::to_string(rank()));
  }
}

const Int& Weight::coeff(int node) const {
  check_node(node);
  return coeffs_[static_cast<std::size_t>(node - 1)];
}

void Weight::set_coeff(int node, Int value) {
  check_node(node);
  coeffs_[static_cast<std::size_t>(node - 1)] = std::move(value);
}

bool Weight::is_zero() const {
  for (const Int& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.rank() != rank()) throw PreconditionError("weight rank mismatch in addition");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.rank() != rank()) throw PreconditionError("weight rank mismatch in subtraction");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Weight& Weight::operator*=(const Int& scalar) {
  for (Int& c : coeffs_) c *= scalar;
  return *this;
}

Weight operator-(Weight a) {
  for (Int& c : a.coeffs_) c = -c;
  return a;
}

std::string Weight::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ',';
    out << coeffs_[i];
  }
  return out.str();
}

namespace {

// Replaces UTF-8 minus signs (U+2212) by ASCII '-'.
std::string normalize_minus(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xe2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

}  // namespace

Weight Weight::parse(std::string_view text, int rank) {
  const std::string normalized = normalize_minus(text);
  std::vector<Int> coeffs;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = normalized.find(',', pos);
    std::string token = normalized.substr(pos, comma == std::string::npos ? std::string::npos
                                                                          : comma - pos);
    // trim
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw ParseError("empty coefficient at position " + std::to_string(pos) + " in weight '" +
                       normalized + "'");
    }
    token = token.substr(first, last - first + 1);
    try {
      coeffs.emplace_back(token);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + token + "' at position " + std::to_string(pos) +
                       " in weight '" + normalized + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(coeffs.size()) != rank) {
    throw ParseError("weight '" + normalized + "' has " + std::to_string(coeffs.size()) +
                     " coefficients, expected " + std::to_string(rank));
  }
  return Weight(std::move(coeffs));
}

std::string omega_string(const Weight& w) {
  std::ostringstream out;
  bool first = true;
  for (int i = 1; i <= w.rank(); ++i) {
    const Int& c = w.coeff(i);
    if (c == 0) continue;
    if (c > 0 && !first) out << '+';
    if (c == -1) {
      out << '-';
    } else if (c != 1) {
      out << c;
    }
    out << "ω" << i;
    first = false;
  }
  if (first) return "0";
  return out.str();
}

}  // namespace cayley
