#include "noncross/cyclo.hpp"

#include <map>
#include <mutex>

#include "noncross/error.hpp"

namespace noncross {

namespace detail {

struct CyclotomicData {
  int m = 1;
  int phi = 1;
  IntPoly modulus;                                // Phi_m, ascending, monic
  std::vector<std::vector<Rational>> zeta_powers;  // zeta^e reduced, 0 <= e < m
};

}  // namespace detail

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// In-place reduction modulo the monic integer polynomial `mod`; the result is
// resized to deg(mod).
void reduce_mod(QPoly& p, const IntPoly& mod) {
  const std::size_t deg = mod.size() - 1;
  for (std::size_t k = p.size(); k-- > deg;) {
    if (p[k] == 0) continue;
    const Rational c = p[k];
    for (std::size_t j = 0; j < deg; ++j) {
      if (mod[j] != 0) p[k - deg + j] -= c * mod[j];
    }
    p[k] = 0;
  }
  p.resize(deg, Rational(0));
}

// Quotient and remainder of a by nonzero b.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly q(a.size() - db, Rational(0));
  const Rational lead_inv = 1 / b.back();
  for (std::size_t k = a.size(); k-- > db;) {
    if (a[k] == 0) continue;
    Rational c = a[k] * lead_inv;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    q[k - db] = std::move(c);
  }
  a.resize(db);
  trim(a);
  trim(q);
  return {q, a};
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::shared_ptr<const detail::CyclotomicData> field_for(int m) {
  if (m < 1) throw Error(ErrorCode::kConfig, "cyclotomic order must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const detail::CyclotomicData>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  auto data = std::make_shared<detail::CyclotomicData>();
  data->m = m;
  data->modulus = cyclotomic_poly(m);
  data->phi = static_cast<int>(data->modulus.size()) - 1;
  QPoly power(static_cast<std::size_t>(data->phi), Rational(0));
  power[0] = 1;
  data->zeta_powers.reserve(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    data->zeta_powers.push_back(power);
    power.insert(power.begin(), Rational(0));
    reduce_mod(power, data->modulus);
  }
  cache.emplace(m, data);
  return data;
}

}  // namespace

IntPoly cyclotomic_poly(int m) {
  if (m < 1) throw Error(ErrorCode::kConfig, "cyclotomic order must be >= 1");
  // x^m - 1 divided by Phi_d for every proper divisor d.
  IntPoly num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const IntPoly den = cyclotomic_poly(d);
    const std::size_t dd = den.size() - 1;
    IntPoly q(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      const std::int64_t c = num[k];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
      q[k - dd] = c;
    }
    num = std::move(q);
  }
  return num;
}

int euler_phi(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

CycNum CycNum::zero(int m) {
  auto field = field_for(m);
  return CycNum(field, std::vector<Rational>(static_cast<std::size_t>(field->phi),
                                             Rational(0)));
}

CycNum CycNum::one(int m) { return from_rational(m, Rational(1)); }

CycNum CycNum::from_rational(int m, const Rational& q) {
  CycNum out = zero(m);
  out.coeffs_[0] = q;
  out.coeffs_[0].canonicalize();
  return out;
}

CycNum CycNum::zeta_power(int m, std::int64_t e) {
  auto field = field_for(m);
  std::int64_t r = e % m;
  if (r < 0) r += m;
  return CycNum(field, field->zeta_powers[static_cast<std::size_t>(r)]);
}

CycNum CycNum::from_coeffs(int m, std::span<const Rational> coeffs) {
  auto field = field_for(m);
  QPoly p(coeffs.begin(), coeffs.end());
  for (auto& c : p) c.canonicalize();
  if (p.size() < static_cast<std::size_t>(field->phi)) {
    p.resize(static_cast<std::size_t>(field->phi), Rational(0));
  }
  reduce_mod(p, field->modulus);
  return CycNum(field, std::move(p));
}

int CycNum::order() const { return field_->m; }

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycNum::is_one() const { return is_rational() && coeffs_[0] == 1; }

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

void CycNum::check_same_field(const CycNum& other) const {
  if (field_ != other.field_ && field_->m != other.field_->m) {
    throw Error(ErrorCode::kConfig, "mismatched cyclotomic orders " +
                                        std::to_string(field_->m) + " and " +
                                        std::to_string(other.field_->m));
  }
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNum& CycNum::operator+=(const CycNum& other) {
  check_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) {
  check_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& other) {
  check_same_field(other);
  if (coeffs_.size() == 1) {
    coeffs_[0] *= other.coeffs_[0];
    return *this;
  }
  QPoly prod(2 * coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (other.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  reduce_mod(prod, field_->modulus);
  coeffs_ = std::move(prod);
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  if (coeffs_.size() == 1) {
    return CycNum(field_, {1 / coeffs_[0]});
  }
  // Invariant: s0 * a == r0 and s1 * a == r1 modulo Phi_m.
  QPoly r0(field_->modulus.begin(), field_->modulus.end());
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0;
  QPoly s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    QPoly next = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  if (r0.size() != 1) {
    throw Error(ErrorCode::kInternal,
                "element shares a factor with the cyclotomic modulus");
  }
  const Rational scale = 1 / r0[0];
  for (auto& c : s0) c *= scale;
  s0.resize(std::max(s0.size(), coeffs_.size()), Rational(0));
  reduce_mod(s0, field_->modulus);
  return CycNum(field_, std::move(s0));
}

CycNum CycNum::pow(std::int64_t e) const {
  CycNum base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1
                          : static_cast<std::uint64_t>(e);
  CycNum result(field_, std::vector<Rational>(coeffs_.size(), Rational(0)));
  result.coeffs_[0] = 1;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

bool operator==(const CycNum& a, const CycNum& b) {
  return a.field_->m == b.field_->m && a.coeffs_ == b.coeffs_;
}

CycNum primitive_root(const AlgebraConfig& config, int i) {
  if (i < 1 || i > config.r()) {
    throw Error(ErrorCode::kConfig, "block index " + std::to_string(i) +
                                        " outside 1.." + std::to_string(config.r()));
  }
  return CycNum::zeta_power(config.m(), config.root_step(i));
}

}  // namespace noncross
