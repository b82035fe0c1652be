#include "noncross/lattice.hpp"

#include <cstdlib>
#include <utility>

#include "noncross/error.hpp"

namespace noncross {

std::optional<std::int64_t> AbelianGroupType::order() const {
  if (free_rank > 0) return std::nullopt;
  std::int64_t n = 1;
  for (auto d : invariant_factors) n *= d;
  return n;
}

std::string AbelianGroupType::to_string() const {
  std::string out;
  for (auto d : invariant_factors) {
    if (!out.empty()) out += " + ";
    out += "Z_" + std::to_string(d);
  }
  if (free_rank > 0) {
    if (!out.empty()) out += " + ";
    out += "Z^" + std::to_string(free_rank);
  }
  return out.empty() ? "0" : out;
}

int rank(const AbelianGroupType& type) {
  int r = type.free_rank;
  for (auto d : type.invariant_factors) {
    if (d > 1) ++r;
  }
  return r;
}

std::vector<std::int64_t> SmithForm::diagonal() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < S.size() && i < (S.empty() ? 0 : S[0].size()); ++i) {
    if (S[i][i] != 0) out.push_back(S[i][i]);
  }
  return out;
}

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix id(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

// Row/column operations applied simultaneously to S and the transform that
// records them.
struct Reducer {
  IntMatrix S, U, V;
  std::size_t rows, cols;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(S[a], S[b]);
    std::swap(U[a], U[b]);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : S) std::swap(row[a], row[b]);
    for (auto& row : V) std::swap(row[a], row[b]);
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, std::int64_t k) {
    for (std::size_t j = 0; j < cols; ++j) S[dst][j] += k * S[src][j];
    for (std::size_t j = 0; j < rows; ++j) U[dst][j] += k * U[src][j];
  }
  // col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, std::int64_t k) {
    for (std::size_t i = 0; i < rows; ++i) S[i][dst] += k * S[i][src];
    for (std::size_t i = 0; i < cols; ++i) V[i][dst] += k * V[i][src];
  }
  void negate_row(std::size_t a) {
    for (auto& x : S[a]) x = -x;
    for (auto& x : U[a]) x = -x;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& matrix) {
  const std::size_t rows = matrix.size();
  const std::size_t cols = rows ? matrix[0].size() : 0;
  for (const auto& row : matrix) {
    if (row.size() != cols) throw Error(ErrorCode::kConfig, "ragged matrix");
  }
  Reducer red{matrix, identity(rows), identity(cols), rows, cols};
  IntMatrix& S = red.S;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Pivot on the smallest nonzero entry of the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (S[i][j] != 0 && (pr == rows || std::llabs(S[i][j]) < std::llabs(S[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) return {std::move(red.U), std::move(red.S), std::move(red.V)};
      red.swap_rows(t, pr);
      red.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (S[i][t] == 0) continue;
        red.add_row(i, t, -(S[i][t] / S[t][t]));
        if (S[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (S[t][j] == 0) continue;
        red.add_col(j, t, -(S[t][j] / S[t][t]));
        if (S[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every later entry; a violating row is folded into row t
      // so the next pass produces a smaller pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (S[i][j] % S[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      red.add_row(t, bad, 1);
    }
    if (S[t][t] < 0) red.negate_row(t);
  }
  return {std::move(red.U), std::move(red.S), std::move(red.V)};
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k ? b[0].size() : 0;
  IntMatrix out(n, IntVector(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw Error(ErrorCode::kConfig, "matrix shape mismatch");
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

AbelianGroupType quotient_type(int dim, const IntegerLattice& sub) {
  if (dim < 0) throw Error(ErrorCode::kConfig, "negative lattice dimension");
  for (const auto& g : sub.gens) {
    if (g.size() != static_cast<std::size_t>(dim)) {
      throw Error(ErrorCode::kConfig, "lattice generator has wrong length");
    }
  }
  AbelianGroupType type;
  if (sub.gens.empty()) {
    type.free_rank = dim;
    return type;
  }
  type.invariant_factors = smith_normal_form(sub.gens).diagonal();
  type.free_rank = dim - static_cast<int>(type.invariant_factors.size());
  return type;
}

IntegerLattice center_value_lattice(const AlgebraConfig& config) {
  IntegerLattice lattice{config.dim(), {}};
  for (int t = 1; t <= config.r(); ++t) {
    for (int k : {2 * t - 2, 2 * t - 1}) {
      IntVector g(static_cast<std::size_t>(config.dim()), 0);
      g[static_cast<std::size_t>(k)] = config.block(t);
      lattice.gens.push_back(std::move(g));
    }
  }
  return lattice;
}

namespace {

void check_length(const AlgebraConfig& config, const ExponentVector& alpha) {
  if (alpha.size() != static_cast<std::size_t>(config.dim())) {
    throw Error(ErrorCode::kConfig, "exponent vector " + alpha.to_string() +
                                        " does not have length " +
                                        std::to_string(config.dim()));
  }
}

}  // namespace

IntVector quotient_image(const AlgebraConfig& config, const ExponentVector& alpha) {
  check_length(config, alpha);
  IntVector image(alpha.size());
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    const std::int64_t n = config.block(static_cast<int>(k / 2) + 1);
    image[k] = ((alpha[k] % n) + n) % n;
  }
  return image;
}

bool in_center_lattice(const AlgebraConfig& config, const ExponentVector& alpha) {
  check_length(config, alpha);
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] % config.block(static_cast<int>(k / 2) + 1) != 0) return false;
  }
  return true;
}

PairingValue commutator_pairing(const AlgebraConfig& config, const ExponentVector& alpha,
                                const ExponentVector& beta) {
  // x^a x^b = c(a,b) x^{a+b} and x^b x^a = c(b,a) x^{a+b}.
  const std::int64_t m = config.m();
  const std::int64_t e =
      cocycle_exponent(config, alpha, beta) - cocycle_exponent(config, beta, alpha);
  return PairingValue{((e % m) + m) % m, m};
}

bool is_central_monomial(const AlgebraConfig& config, const ExponentVector& alpha) {
  check_length(config, alpha);
  const auto dim = static_cast<std::size_t>(config.dim());
  for (std::size_t k = 0; k < dim; ++k) {
    if (!commutator_pairing(config, alpha, ExponentVector::unit(dim, k)).is_trivial()) {
      return false;
    }
  }
  return true;
}

}  // namespace noncross
