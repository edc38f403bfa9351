#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curvehom/homology.hpp"

namespace curvehom {

/// The three plane-curve singularity charts.
enum class SingularityModel { NodalCubic, Crossing, CuspidalCubic };

inline constexpr std::array<SingularityModel, 3> kAllModels = {
    SingularityModel::NodalCubic, SingularityModel::Crossing, SingularityModel::CuspidalCubic};

/// "nodal-cubic-chart", "crossing", "cuspidal-cubic-chart".
std::string model_name(SingularityModel model);
/// Accepts the canonical names plus the short forms "nodal", "node", "cusp",
/// "cuspidal". Throws InputError otherwise.
SingularityModel parse_model(std::string_view name);

/// The polynomial ring Q[x, y] shared by every local model.
RingPtr local_ring();
/// Defining relation: x^3+x^2-y^2, xy, or x^3-y^2.
Polynomial model_relation(SingularityModel model);

/// Basis symbol eps^e dx^a dy^b de^c of a derived wedge power.
struct WedgeSymbol {
  unsigned e = 0;
  unsigned a = 0;
  unsigned b = 0;
  unsigned c = 0;

  int degree() const { return -static_cast<int>(c + e); }
  unsigned weight() const { return a + b + c; }
  /// "eps*dx*de^2", "1" for the unit.
  std::string label() const;
  bool operator==(const WedgeSymbol&) const = default;
};

/// Basis of the weight-k part in homological degree i, in the fixed order
/// (no eps first, then dx before dy).
std::vector<WedgeSymbol> wedge_basis(unsigned k, int degree);

/// Q[x,y][eps]/(eps^2) with eps in degree -1 and delta(eps) = relation.
struct DgAlgebra {
  SingularityModel model;
  RingPtr ring;
  Polynomial relation;
  /// Image of eps under the differential.
  Polynomial delta_eps;
  ChainComplex complex;
};

DgAlgebra build_dg_algebra(SingularityModel model);

/// Weight-k derived wedge power of the cotangent complex, a complex of free
/// Q[x,y]-modules with the internal differential Delta.
struct DgModule {
  SingularityModel model;
  unsigned k = 0;
  ChainComplex complex;
  std::map<int, std::vector<WedgeSymbol>> basis;

  /// Element of degree i as "(poly)*symbol + ..." text.
  std::string render(int degree, const FreeElement& element) const;
};

DgModule wedge_power(SingularityModel model, unsigned k);

/// Delta applied to p * symbol, as a list of (coefficient, symbol).
std::vector<std::pair<Polynomial, WedgeSymbol>> apply_delta(SingularityModel model, const Polynomial& p,
                                                            const WedgeSymbol& s);
/// The de Rham differential applied to p * symbol.
std::vector<std::pair<Polynomial, WedgeSymbol>> apply_de_rham(const Polynomial& p, const WedgeSymbol& s);

/// d^dR: wedge^k -> wedge^(k+1), a degree-preserving chain map.
ChainMap de_rham(SingularityModel model, unsigned k);

/// Dimension of H^i of wedge^k, per k in [0, k_max].
struct LocalTableRow {
  unsigned k;
  std::map<int, Dimension> dims;
};
std::vector<LocalTableRow> local_cohomology_table(SingularityModel model, unsigned k_max = 5);

/// 0 -> R -> R^2 -> R -> 0 over R = Q[x,y]/(relation) in degrees -2..0 with
/// 1 -> (f_x, f_y) and (g, h) -> -f_y g + f_x h.
ChainComplex chart_complex(SingularityModel model);

/// Membership of the two sign variants ((3x+2)y, +-2(x^2+x)) in the kernel of
/// the chart complex's degree -1 map for the nodal chart.
struct KernelSignReport {
  FreeElement printed;
  FreeElement corrected;
  bool printed_is_cycle = false;
  bool corrected_is_cycle = false;
  bool corrected_spans_homology = false;
};
KernelSignReport kernel_sign_check();

/// The m-primary torsion of H^0(wedge^1), elements of the degree-0 term.
PresentedModule torsion_of_cotangent(SingularityModel model);

/// Matrix of torsion(H^0 wedge^1) -> H^0(wedge^2) induced by d^dR, in the
/// torsion basis and the homology basis.
RationalMatrix torsion_composite(SingularityModel model);

/// O_P -> L_Z -> wedge^2 L_Z for the crossing, 1 -> x dy -> dx^dy.
RationalMatrix crossing_composite();

/// Derived facts used by the global tables, computed once per model.
struct LocalInvariants {
  std::vector<LocalTableRow> table;
  /// rank of H^(-k+1)(d^dR): wedge^k -> wedge^(k+1), for k = 1..k_max.
  std::map<unsigned, std::size_t> de_rham_rank;
  std::size_t torsion_dim = 0;
  std::size_t torsion_composite_rank = 0;
};
inline constexpr unsigned kLocalMaxWeight = 5;
const LocalInvariants& local_invariants(SingularityModel model);

/// Finite dimension at (k, i) from the cached table; k beyond the table is
/// extended by the shift rule H^i(wedge^(k+1)) = H^(i+1)(wedge^k) for k >= 2.
Dimension local_dimension(SingularityModel model, unsigned k, int i);

}  // namespace curvehom
