#ifndef ESTAR_SYMBOLIC_HPP
#define ESTAR_SYMBOLIC_HPP

#include <span>
#include <string>
#include <vector>

#include "estar/rational.hpp"

namespace estar {

/// Exact affine form c0 + sum_i coeff[i] * alpha_i over r formal symbols
/// alpha_1..alpha_r. The symbols model weights that are linearly independent
/// over Q: a form equals a rational constant iff every coefficient is zero.
/// Arity is fixed within a computation; mixing arities throws.
class SymbolicValue {
 public:
  SymbolicValue() = default;
  SymbolicValue(Rational c0, int arity) : c0_(std::move(c0)), coeffs_(arity, Rational(0)) {}
  SymbolicValue(Rational c0, std::vector<Rational> coeffs)
      : c0_(std::move(c0)), coeffs_(std::move(coeffs)) {}

  static SymbolicValue constant(Rational c, int arity) { return SymbolicValue(std::move(c), arity); }
  static SymbolicValue symbol(int i, int arity) {
    SymbolicValue v(Rational(0), arity);
    v.coeffs_[i] = Rational(1);
    return v;
  }

  int arity() const { return static_cast<int>(coeffs_.size()); }
  const Rational& c0() const { return c0_; }
  const Rational& coeff(int i) const { return coeffs_[i]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_constant() const {
    for (const auto& c : coeffs_)
      if (c.sign() != 0) return false;
    return true;
  }

  SymbolicValue& operator+=(const SymbolicValue& o) {
    check_arity(o);
    c0_ += o.c0_;
    for (int i = 0; i < arity(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  SymbolicValue& operator-=(const SymbolicValue& o) {
    check_arity(o);
    c0_ -= o.c0_;
    for (int i = 0; i < arity(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  SymbolicValue& operator*=(const Rational& s) {
    c0_ *= s;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend SymbolicValue operator+(SymbolicValue a, const SymbolicValue& b) { return a += b; }
  friend SymbolicValue operator-(SymbolicValue a, const SymbolicValue& b) { return a -= b; }
  friend SymbolicValue operator*(SymbolicValue a, const Rational& s) { return a *= s; }
  friend SymbolicValue operator*(const Rational& s, SymbolicValue a) { return a *= s; }

  friend bool operator==(const SymbolicValue& a, const SymbolicValue& b) {
    return a.c0_ == b.c0_ && a.coeffs_ == b.coeffs_;
  }

  /// Exact evaluation at concrete symbol values.
  Rational instantiate(std::span<const Rational> alphas) const {
    if (static_cast<int>(alphas.size()) != arity())
      throw DomainError("symbol arity mismatch in instantiate");
    Rational out = c0_;
    for (int i = 0; i < arity(); ++i) out += coeffs_[i] * alphas[i];
    return out;
  }

  std::string str() const {
    std::string s = c0_.str();
    for (int i = 0; i < arity(); ++i) {
      if (coeffs_[i].sign() == 0) continue;
      s += (coeffs_[i].sign() > 0 ? " + " : " - ");
      s += coeffs_[i].abs().str() + "*a" + std::to_string(i + 1);
    }
    return s;
  }

 private:
  void check_arity(const SymbolicValue& o) const {
    if (o.arity() != arity()) throw DomainError("symbol arity mismatch");
  }

  Rational c0_;
  std::vector<Rational> coeffs_;
};

}  // namespace estar

#endif
