#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noncross/config.hpp"
#include "noncross/cyclo.hpp"
#include "noncross/twisted.hpp"

namespace noncross {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

/// Sublattice of Z^dim spanned by `gens`.
struct IntegerLattice {
  int dim = 0;
  std::vector<IntVector> gens;
};

/// Finite-or-not abelian group Z_{d_1} + ... + Z_{d_k} + Z^free_rank with
/// d_1 | d_2 | ... | d_k. Factors equal to 1 are kept as computed.
struct AbelianGroupType {
  std::vector<std::int64_t> invariant_factors;
  int free_rank = 0;

  /// Group order, or nullopt when infinite.
  std::optional<std::int64_t> order() const;
  /// "Z_1 + Z_6 + Z_6 + Z^1"; "0" for the trivial group without factors.
  std::string to_string() const;

  friend bool operator==(const AbelianGroupType&, const AbelianGroupType&) = default;
};

/// Minimal number of generators: factors > 1 plus the free rank.
int rank(const AbelianGroupType& type);

/// U * M * V = S with U, V unimodular and S in Smith normal form.
struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  /// Nonzero diagonal entries of S, in order.
  std::vector<std::int64_t> diagonal() const;
};

/// Rows of `matrix` must have equal length.
SmithForm smith_normal_form(const IntMatrix& matrix);

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

/// Z^dim / sub.
AbelianGroupType quotient_type(int dim, const IntegerLattice& sub);

/// Gamma_F = (+)_i (n_i Z + n_i Z) inside Gamma_D = Z^{2r}.
IntegerLattice center_value_lattice(const AlgebraConfig& config);

/// Image of alpha in Gamma_D / Gamma_F = (+)_i (Z_{n_i} + Z_{n_i}), reduced
/// componentwise into [0, n_i).
IntVector quotient_image(const AlgebraConfig& config, const ExponentVector& alpha);

/// Membership alpha in Gamma_F.
bool in_center_lattice(const AlgebraConfig& config, const ExponentVector& alpha);

/// zeta_m^exponent.
struct PairingValue {
  std::int64_t exponent = 0;
  std::int64_t m = 1;

  bool is_trivial() const { return exponent == 0; }
  CycNum to_cyc() const { return CycNum::zeta_power(static_cast<int>(m), exponent); }
  friend bool operator==(const PairingValue&, const PairingValue&) = default;
};

/// epsilon with x^alpha x^beta = epsilon x^beta x^alpha.
PairingValue commutator_pairing(const AlgebraConfig& config, const ExponentVector& alpha,
                                const ExponentVector& beta);

/// x^alpha commutes with every generator.
bool is_central_monomial(const AlgebraConfig& config, const ExponentVector& alpha);

}  // namespace noncross
