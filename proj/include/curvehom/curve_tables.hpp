#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "curvehom/local_models.hpp"

namespace curvehom {

enum class CurveKind { Nodal, CuspidalCubic };

/// Projective curve: nodal of arithmetic genus g with n nodes (0 <= n <= g),
/// or the cuspidal plane cubic (g = 1, one cusp).
struct CurveSpec {
  CurveKind kind = CurveKind::Nodal;
  unsigned genus = 1;
  unsigned nodes = 1;

  static CurveSpec nodal(unsigned genus, unsigned nodes);
  static CurveSpec cuspidal_cubic();

  /// Throws InputError for an invalid combination.
  void validate() const;
  unsigned singular_points() const { return kind == CurveKind::Nodal ? nodes : 1; }
  unsigned normalization_genus() const { return kind == CurveKind::Nodal ? genus - nodes : 0; }
  /// Local model used for the rank of d^dR at each singular point.
  SingularityModel model() const;
  /// "nodal(g=1,n=1)" or "cuspidal-cubic".
  std::string describe() const;
  bool is_nodal_cubic() const { return kind == CurveKind::Nodal && genus == 1 && nodes == 1; }
  bool operator==(const CurveSpec&) const = default;
};

/// Integer table indexed by degree; absent degrees are zero.
struct HomologyTable {
  std::string label;
  /// "cohomological" or "homological".
  std::string convention = "cohomological";
  std::map<int, std::size_t> entries;
  /// Values derived by this library rather than read off a published table.
  bool inferred = false;
  std::string note;

  std::size_t dim(int degree) const;
  void set(int degree, std::size_t value);
  /// Entries with degree in [lo, hi], zeros included.
  std::vector<std::pair<int, std::size_t>> window(int lo, int hi) const;
  long alternating_sum() const;
};

HomologyTable cotangent_cohomology(const CurveSpec& c);
HomologyTable wedge_hypercohomology(const CurveSpec& c, unsigned k);
HomologyTable singular_cohomology(const CurveSpec& c);
/// HH_i = sum over q - p = i of H^p(wedge^q), homological degrees in [lo, hi].
HomologyTable hkr_hochschild(const CurveSpec& c, int lo, int hi);

/// Riemann-Roch bookkeeping for a plane cubic X in P^2.
struct EulerReport {
  long chi_o_p2_1 = 0;           // chi(O_P2(1))
  long chi_o_x = 0;              // chi(O_X)
  long chi_o_x_minus3 = 0;       // chi(O_X(-3))
  long chi_omega_p2 = 0;         // chi(Omega_P2)
  long chi_omega_p2_minus3 = 0;  // chi(Omega_P2(-3))
  long chi_omega_restricted = 0; // chi(Omega_P2|_X)
  long chi_l_x = 0;              // chi(L_X)
  bool ok = false;
};

long chi_projective_plane(int d);
long chi_plane_cubic(int d);
long chi_cotangent_plane(int d);
/// Requires a plane cubic: nodal with g = 1, or the cuspidal cubic.
EulerReport euler_check(const CurveSpec& c);

}  // namespace curvehom
