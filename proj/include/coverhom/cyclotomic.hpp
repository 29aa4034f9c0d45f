#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coverhom/rational.hpp"

namespace coverhom {

// Integer coefficients of the e-th cyclotomic polynomial (degree phi(e)).
std::vector<Int> cyclotomic_polynomial(long long e);

// Element of Q(zeta_e), stored as a rational polynomial in zeta_e reduced
// modulo the e-th cyclotomic polynomial.  Equality is exact and canonical
// for a fixed conductor; mixed conductors are lifted to the lcm.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_{Rat(0)} {}
  explicit Cyclotomic(const Rat& r) : conductor_(1), coeffs_{r} {}
  Cyclotomic(long long conductor, std::vector<Rat> coeffs);  // reduced mod Phi_e

  static Cyclotomic zeta(long long conductor, long long power = 1);

  long long conductor() const { return conductor_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  bool operator<(const Cyclotomic& o) const;  // deterministic total order

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rat> as_rational() const;

  // Galois action zeta -> zeta^t for gcd(t, conductor) = 1.
  Cyclotomic galois(long long t) const;
  // Complex conjugate, i.e. galois(-1).
  Cyclotomic conj() const { return galois(conductor_ - 1); }

  // Re-express in Q(zeta_m) for conductor_ | m.
  Cyclotomic lift(long long m) const;

  std::string str() const;

 private:
  void reduce();
  long long conductor_;
  std::vector<Rat> coeffs_;  // size = deg Phi_conductor
};

}  // namespace coverhom
