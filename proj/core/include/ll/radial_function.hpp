#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

// Radial profiles of the form  (sum_k c_k r^(base+k)) * exp(-lam * r)  with a
// real base power and integer-stepped exponents. The family is closed under
// d/dr, multiplication by integer powers of r (including 1/r), and linear
// combination at matching decay rate, which is exactly what the Hamiltonian,
// K, J^2 and J_z need. States are never evaluated at r = 0 when base < 0.

namespace ll {

class RadialFunction {
 public:
  RadialFunction() = default;
  RadialFunction(double base, double lam, std::vector<double> coeffs)
      : base_(base), lam_(lam), c_(std::move(coeffs)) {
    trim();
  }

  static RadialFunction zero() { return RadialFunction(); }

  bool is_zero() const { return c_.empty(); }
  double base() const { return base_; }
  double decay() const { return lam_; }
  const std::vector<double>& coeffs() const { return c_; }

  double operator()(double r) const {
    if (c_.empty()) return 0.0;
    if (r <= 0.0) throw std::invalid_argument("RadialFunction: r must be positive");
    // Horner over the integer-stepped part, then the common r^base * e^{-lam r}
    double poly = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) poly = poly * r + *it;
    return poly * std::pow(r, base_) * std::exp(-lam_ * r);
  }

  RadialFunction derivative() const {
    if (c_.empty()) return zero();
    // d/dr: power term drops base by 1, the exponential adds -lam at same power
    std::vector<double> out(c_.size() + 1, 0.0);
    for (size_t k = 0; k < c_.size(); ++k) {
      out[k] += (base_ + static_cast<double>(k)) * c_[k];
      out[k + 1] -= lam_ * c_[k];
    }
    return RadialFunction(base_ - 1.0, lam_, std::move(out));
  }

  // Multiply by r^dk (dk may be negative: 1/r terms tracked as base shifts).
  RadialFunction shifted(int dk) const {
    if (c_.empty()) return zero();
    return RadialFunction(base_ + dk, lam_, c_);
  }

  RadialFunction scaled(double s) const {
    if (s == 0.0 || c_.empty()) return zero();
    std::vector<double> out = c_;
    for (double& v : out) v *= s;
    return RadialFunction(base_, lam_, std::move(out));
  }

  RadialFunction operator+(const RadialFunction& o) const {
    if (c_.empty()) return o;
    if (o.c_.empty()) return *this;
    if (std::abs(lam_ - o.lam_) > 1e-14 * (std::abs(lam_) + std::abs(o.lam_) + 1.0))
      throw std::invalid_argument("RadialFunction: decay-rate mismatch in addition");
    // bases must differ by an integer for the sum to stay in the family
    const double d = o.base_ - base_;
    const double rd = std::round(d);
    if (std::abs(d - rd) > 1e-9)
      throw std::invalid_argument("RadialFunction: non-integer base offset in addition");
    const int off = static_cast<int>(rd);
    const double nb = std::min(base_, o.base_);
    const int sa = (off >= 0) ? 0 : -off;  // index shift of *this in the result
    const int sb = (off >= 0) ? off : 0;
    std::vector<double> out(std::max(sa + c_.size(), sb + o.c_.size()), 0.0);
    for (size_t k = 0; k < c_.size(); ++k) out[sa + k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) out[sb + k] += o.c_[k];
    return RadialFunction(nb, lam_, std::move(out));
  }

  RadialFunction operator-(const RadialFunction& o) const { return *this + o.scaled(-1.0); }

 private:
  void trim() {
    // strip leading/trailing zero coefficients so base_ stays canonical
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0.0) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      base_ = 0.0;
      lam_ = 0.0;
      return;
    }
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + lead);
      base_ += static_cast<double>(lead);
    }
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
  }

  double base_ = 0.0;
  double lam_ = 0.0;
  std::vector<double> c_;
};

} // namespace ll
