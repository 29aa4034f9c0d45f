#include "coverhom/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace coverhom {

namespace {

// Exact division of integer polynomials (num / den, den monic-leading).
std::vector<Int> poly_div_exact(const std::vector<Int>& num, const std::vector<Int>& den) {
  std::vector<Int> rem = num;
  std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
  for (size_t i = quot.size(); i-- > 0;) {
    Int c = rem[i + den.size() - 1] / den.back();
    quot[i] = c;
    if (c != 0)
      for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return quot;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(long long e) {
  static std::map<long long, std::vector<Int>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  std::function<std::vector<Int>(long long)> phi = [&](long long n) -> std::vector<Int> {
    auto hit = cache.find(n);
    if (hit != cache.end()) return hit->second;
    // x^n - 1 divided by the product of Phi_d over proper divisors d.
    std::vector<Int> num(n + 1, Int(0));
    num[0] = -1;
    num[n] = 1;
    for (long long d = 1; d < n; ++d)
      if (n % d == 0) num = poly_div_exact(num, phi(d));
    cache[n] = num;
    return num;
  };
  return phi(e);
}

Cyclotomic::Cyclotomic(long long conductor, std::vector<Rat> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (conductor < 1) throw std::invalid_argument("Cyclotomic: conductor must be positive");
  reduce();
}

void Cyclotomic::reduce() {
  auto phi = cyclotomic_polynomial(conductor_);
  size_t deg = phi.size() - 1;  // = phi(conductor)
  // Polynomial remainder modulo the monic Phi_e.
  while (coeffs_.size() > deg) {
    Rat c = coeffs_.back();
    size_t top = coeffs_.size() - 1;
    coeffs_.pop_back();
    if (c != 0)
      for (size_t j = 0; j < deg; ++j) coeffs_[top - deg + j] -= c * Rat(phi[j]);
  }
  coeffs_.resize(deg, Rat(0));
}

Cyclotomic Cyclotomic::zeta(long long conductor, long long power) {
  power %= conductor;
  if (power < 0) power += conductor;
  std::vector<Rat> c(power + 1, Rat(0));
  c[power] = 1;
  return Cyclotomic(conductor, std::move(c));
}

Cyclotomic Cyclotomic::lift(long long m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0) throw std::invalid_argument("Cyclotomic::lift: not a multiple");
  long long step = m / conductor_;
  std::vector<Rat> c((coeffs_.size() - 1) * step + 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
  return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  long long m = std::lcm(conductor_, o.conductor_);
  Cyclotomic a = lift(m), b = o.lift(m);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  long long m = std::lcm(conductor_, o.conductor_);
  Cyclotomic a = lift(m), b = o.lift(m);
  std::vector<Rat> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Cyclotomic(m, std::move(prod));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  long long m = std::lcm(conductor_, o.conductor_);
  return lift(m).coeffs_ == o.lift(m).coeffs_;
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
  long long m = std::lcm(conductor_, o.conductor_);
  return lift(m).coeffs_ < o.lift(m).coeffs_;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::optional<Rat> Cyclotomic::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

Cyclotomic Cyclotomic::galois(long long t) const {
  if (conductor_ == 1) return *this;
  if (std::gcd(t % conductor_ + conductor_, conductor_) != 1)
    throw std::invalid_argument("Cyclotomic::galois: t not coprime to conductor");
  std::vector<Rat> c(conductor_, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    long long k = ((long long)i * t) % conductor_;
    if (k < 0) k += conductor_;
    c[k] += coeffs_[i];
  }
  return Cyclotomic(conductor_, std::move(c));
}

std::string Cyclotomic::str() const {
  if (is_rational()) return rat_to_string(coeffs_[0]);
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += rat_to_string(coeffs_[i]);
    if (i > 0) out += "*z" + std::to_string(conductor_) + "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace coverhom
