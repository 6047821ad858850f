#include "linper/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace linper {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("QPoly: integer overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("QPoly: integer overflow");
  return r;
}

}  // namespace

QPoly::QPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(std::int64_t c) { return QPoly({c}); }

QPoly QPoly::monomial(int k, std::int64_t c) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  std::vector<std::int64_t> v(static_cast<std::size_t>(k) + 1, 0);
  v.back() = c;
  return QPoly(std::move(v));
}

QPoly QPoly::q_power_minus_one(int k) { return monomial(k) - constant(1); }

QPoly QPoly::q_integer(int k) {
  if (k < 0) throw std::invalid_argument("negative q-integer");
  return QPoly(std::vector<std::int64_t>(static_cast<std::size_t>(k), 1));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t QPoly::coefficient(int k) const {
  return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)] : 0;
}

std::int64_t QPoly::eval(std::int64_t q) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, q), *it);
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], -other.coeffs_[i]);
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return QPoly(std::move(out));
}

QPoly QPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  QPoly acc = constant(1);
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

std::pair<QPoly, QPoly> QPoly::divmod_monic(const QPoly& divisor) const {
  if (divisor.is_zero() || divisor.leading() != 1) throw std::invalid_argument("divisor must be monic");
  std::vector<std::int64_t> rem = coeffs_;
  const int dd = divisor.degree();
  const int nd = degree();
  if (nd < dd) return {QPoly(), *this};
  std::vector<std::int64_t> quot(static_cast<std::size_t>(nd - dd) + 1, 0);
  for (int k = nd - dd; k >= 0; --k) {
    const std::int64_t c = rem[static_cast<std::size_t>(k + dd)];
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = rem[static_cast<std::size_t>(k + j)];
      slot = checked_add(slot, -checked_mul(c, divisor.coeffs_[static_cast<std::size_t>(j)]));
    }
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

std::string QPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const std::int64_t c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << 'q';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::string QPoly::to_json() const { return nlohmann::json(coeffs_).dump(); }

QPoly QFactored::expand() const {
  QPoly acc = QPoly::monomial(q_power);
  for (const auto& [k, m] : cyclotomic_like) acc = acc * QPoly::q_power_minus_one(k).pow(m);
  return acc;
}

int QFactored::degree() const {
  int d = q_power;
  for (const auto& [k, m] : cyclotomic_like) d += k * m;
  return d;
}

QFactored& QFactored::operator*=(const QFactored& other) {
  q_power += other.q_power;
  for (const auto& [k, m] : other.cyclotomic_like) cyclotomic_like[k] += m;
  return *this;
}

QFactored QFactored::common_multiple(const QFactored& a, const QFactored& b) {
  QFactored out = a;
  out.q_power = std::max(a.q_power, b.q_power);
  for (const auto& [k, m] : b.cyclotomic_like) out.cyclotomic_like[k] = std::max(out.cyclotomic_like[k], m);
  return out;
}

QFactored QFactored::divided_by(const QFactored& other) const {
  QFactored out = *this;
  out.q_power -= other.q_power;
  if (out.q_power < 0) throw std::invalid_argument("QFactored: not a divisor");
  for (const auto& [k, m] : other.cyclotomic_like) {
    auto it = out.cyclotomic_like.find(k);
    if (it == out.cyclotomic_like.end() || it->second < m) throw std::invalid_argument("QFactored: not a divisor");
    it->second -= m;
    if (it->second == 0) out.cyclotomic_like.erase(it);
  }
  return out;
}

int QRat::degree() const {
  if (den.is_zero()) throw std::domain_error("QRat: zero denominator");
  if (num.is_zero()) throw std::domain_error("QRat: zero has no degree");
  return num.degree() - den.degree();
}

std::vector<std::int64_t> QRat::laurent(int terms) const {
  if (den.is_zero() || den.leading() != 1) throw std::invalid_argument("QRat::laurent: denominator must be monic");
  if (terms <= 0 || num.is_zero()) return std::vector<std::int64_t>(static_cast<std::size_t>(std::max(terms, 0)), 0);
  // Multiply by q^shift so the first `terms` coefficients land on
  // nonnegative powers of the quotient.
  const int shift = std::max(0, terms - 1 - degree());
  const QPoly shifted = num * QPoly::monomial(shift);
  const auto [quot, rem] = shifted.divmod_monic(den);
  std::vector<std::int64_t> out;
  const int top = degree() + shift;
  for (int j = 0; j < terms; ++j) out.push_back(quot.coefficient(top - j));
  return out;
}

std::int64_t QRat::leading() const { return laurent(1).front(); }

std::string QRat::to_string() const { return "(" + num.to_string() + ")/(" + den.to_string() + ")"; }

}  // namespace linper
