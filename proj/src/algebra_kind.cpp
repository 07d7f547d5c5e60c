#include "ykit/algebra_kind.hpp"

#include <stdexcept>

namespace ykit {

std::string family_name(Family f) {
  switch (f) {
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  throw std::logic_error("family_name: bad family");
}

Family parse_family(const std::string& s) {
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw std::invalid_argument("parse_family: expected B, C or D, got '" + s +
                              "'");
}

AlgebraKind::AlgebraKind(Family f, int n) : family_(f), n_(n) {
  if (n < 1) throw std::invalid_argument("AlgebraKind: rank must be >= 1");
  if (f == Family::D && n < 2)
    throw std::invalid_argument("AlgebraKind: family D needs rank >= 2");
  switch (f) {
    case Family::B:
      N_ = 2 * n + 1;
      kappa_ = Rational(2 * n - 1, 2);
      break;
    case Family::C:
      N_ = 2 * n;
      kappa_ = Rational(n + 1);
      break;
    case Family::D:
      N_ = 2 * n;
      kappa_ = Rational(n - 1);
      break;
  }
  space_ = SpaceIndex::symmetric(static_cast<std::size_t>(N_));
}

int AlgebraKind::theta(int i, int j) const {
  if (!space_.has_label(i) || !space_.has_label(j))
    throw std::out_of_range("AlgebraKind::theta: label out of range");
  if (orthogonal()) return 1;
  return sgn_label(i) * sgn_label(j);
}

std::string AlgebraKind::name() const {
  const std::string alg = family_ == Family::C
                              ? "sp_" + std::to_string(N_)
                              : "o_" + std::to_string(N_);
  return family_name(family_) + std::to_string(n_) + " (" + alg + ")";
}

}  // namespace ykit
