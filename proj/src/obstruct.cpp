#include "noncross/obstruct.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "noncross/error.hpp"

namespace noncross {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kNoncrossed:
      return "NONCROSSED";
    case Verdict::kInconclusive:
      return "INCONCLUSIVE";
    case Verdict::kInapplicable:
      return "INAPPLICABLE";
  }
  return "UNKNOWN";
}

std::vector<std::int64_t> factorize(std::int64_t n) {
  if (n < 2) throw Error(ErrorCode::kConfig, "factorize requires n >= 2");
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

AbelianGroupType forced_group_type(const std::vector<std::int64_t>& primes) {
  if (primes.empty()) throw Error(ErrorCode::kConfig, "empty prime multiset");
  // Z^r / diag(p_1, ..., p_r) is (+)_j Z_{p_j}; SNF merges the coprime parts.
  const int r = static_cast<int>(primes.size());
  IntegerLattice lattice{r, {}};
  for (int j = 0; j < r; ++j) {
    IntVector g(static_cast<std::size_t>(r), 0);
    g[static_cast<std::size_t>(j)] = primes[static_cast<std::size_t>(j)];
    lattice.gens.push_back(std::move(g));
  }
  return quotient_type(r, lattice);
}

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d <= p / d; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int checked_int(std::int64_t n) {
  if (n > std::numeric_limits<int>::max()) {
    throw Error(ErrorCode::kConfig, "degree too large");
  }
  return static_cast<int>(n);
}

std::string join(const std::vector<std::int64_t>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

std::pair<AlgebraConfig, AlgebraConfig> witness_configs(std::int64_t n) {
  const int root_order = checked_int(n);
  std::vector<int> primes;
  for (auto p : factorize(n)) primes.push_back(static_cast<int>(p));
  return {AlgebraConfig(std::move(primes), root_order),
          AlgebraConfig({root_order}, root_order)};
}

ObstructionVerdict obstruction(std::int64_t n, std::int64_t characteristic) {
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw Error(ErrorCode::kConfig,
                "characteristic must be 0 or prime, got " + std::to_string(characteristic));
  }
  ObstructionVerdict out;
  ObstructionCertificate& cert = out.certificate;
  cert.n = n;
  cert.characteristic = characteristic;
  cert.factorization = factorize(n);
  const auto [first, second] = witness_configs(n);
  cert.first_witness = first;
  cert.second_witness = second;
  const auto r = cert.factorization.size();
  const std::string ns = std::to_string(n);

  cert.forced_group = forced_group_type(cert.factorization);
  cert.forced_rank = rank(cert.forced_group);
  cert.second_witness_bound = rank(quotient_type(second.dim(), center_value_lattice(second)));

  std::map<std::int64_t, int> multiplicity;
  for (auto p : cert.factorization) ++multiplicity[p];
  for (auto [p, k] : multiplicity) {
    if (k >= 3) {
      cert.cube_prime = p;
      break;
    }
  }

  auto& trail = cert.trail;
  trail.push_back("n = " + join(cert.factorization, "*") + " (r = " + std::to_string(r) +
                  " prime factors)");
  trail.push_back("assume UD(k," + ns + ") is a G-crossed product with |G| = " + ns);
  trail.push_back("witness D1 = Delta_" + std::to_string(2 * r) + "(k(zeta_" + ns + "); " +
                  join(cert.factorization, ",") + ") is then a G-crossed product");
  trail.push_back(
      "assumed: Gal(K/F) is a quotient of a subgroup of Gamma_D1/Gamma_F = "
      "(+) (Z_p + Z_p), so G is abelian with every element of prime order");
  trail.push_back("G = (+)_j Z_{p_j} = " + cert.forced_group.to_string() +
                  ", rank(G) = " + std::to_string(cert.forced_rank));
  trail.push_back("witness D2 = Delta_2(k(zeta_" + ns + "); " + ns +
                  ") is then a G-crossed product; Gamma_D2/Gamma_F = Z_" + ns + " + Z_" + ns);
  trail.push_back("rank(G) <= rank(H/F*(H cap (1+m_D))) <= rank(Z_" + ns + " + Z_" + ns +
                  ") = " + std::to_string(cert.second_witness_bound));

  if (characteristic != 0 && n % characteristic == 0) {
    out.verdict = Verdict::kInapplicable;
    trail.push_back("char k = " + std::to_string(characteristic) + " divides n = " + ns +
                    ": hypothesis fails, argument does not apply");
  } else if (cert.forced_rank > cert.second_witness_bound) {
    out.verdict = Verdict::kNoncrossed;
    trail.push_back(std::to_string(*cert.cube_prime) + "^3 | " + ns + " so rank(G) = " +
                    std::to_string(cert.forced_rank) + " > " +
                    std::to_string(cert.second_witness_bound) +
                    ": contradiction, UD(k," + ns + ") is not a crossed product");
  } else {
    out.verdict = Verdict::kInconclusive;
    trail.push_back("rank(G) = " + std::to_string(cert.forced_rank) +
                    " <= " + std::to_string(cert.second_witness_bound) +
                    ": no contradiction (no prime cube divides n)");
  }
  return out;
}

}  // namespace noncross
