#pragma once

#include <climits>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "curvehom/curve_tables.hpp"

namespace curvehom {

enum class Provenance { Computed, Rule, Deduced, Unknown };
std::string provenance_name(Provenance p);

/// Rank of one differential together with where the number came from.
struct RankDatum {
  std::optional<std::size_t> rank;
  Provenance provenance = Provenance::Unknown;
  /// Short name such as "alpha", "gamma", "beta_2", "uB_3".
  std::string name;
  /// How the rank was obtained (local computation, constraint, ...).
  std::string detail;
  /// For rules: the argument the rank rests on.
  std::string citation;

  bool known() const { return rank.has_value(); }
  static RankDatum computed(std::size_t rank, std::string name, std::string detail);
  static RankDatum rule(std::size_t rank, std::string name, std::string citation);
  static RankDatum deduced(std::size_t rank, std::string name, std::string detail);
  static RankDatum unknown(std::string name);
};

/// (p, q) with d_r: (p, q) -> (p + r, q - r + 1).
using Cell = std::pair<int, int>;

/// Cells with p, q and p - q in the given closed ranges.
struct Region {
  int p_min = INT_MIN / 4, p_max = INT_MAX / 4;
  int q_min = INT_MIN / 4, q_max = INT_MAX / 4;
  int diff_min = INT_MIN / 4, diff_max = INT_MAX / 4;

  bool contains(const Cell& c) const {
    const int d = c.first - c.second;
    return c.first >= p_min && c.first <= p_max && c.second >= q_min && c.second <= q_max && d >= diff_min &&
           d <= diff_max;
  }
};

class BigradedPage {
 public:
  int page = 1;
  Region region;
  /// Dimensions inside the region; absent cells are zero.
  std::map<Cell, std::size_t> entries;
  /// Keyed by source cell.
  std::map<Cell, RankDatum> differentials;

  std::size_t dim(const Cell& c) const;
  Cell target(const Cell& source) const { return {source.first + page, source.second - page + 1}; }
  /// Rank of the differential leaving `source` (0 when none is recorded).
  std::size_t out_rank(const Cell& source) const;
  std::vector<Cell> unknowns() const;
  bool all_zero_differentials() const;
  /// Total dimension on the diagonal p + q = degree.
  std::size_t diagonal(int degree) const;
  /// Sum over all cells of (-1)^(p+q) dim.
  long euler_characteristic() const;
};

/// Next page: E_{r+1}(p,q) = E_r(p,q) - rank(out) - rank(in). Requires every
/// rank known; throws PreconditionError naming the cell if an entry would be
/// negative. New differentials get rank 0 when the source or the target
/// vanishes (or the target leaves the region) and are unknown otherwise.
BigradedPage turn_page(const BigradedPage& p);

/// Hodge-to-de Rham E1 page E1^{p,q} = H^q(wedge^p) on rows q_min..1 and
/// columns 0..2-q_min.
BigradedPage build_hdr_e1(const CurveSpec& c, int q_min = -8);
/// Drops every column p < k (the page of the filtered piece F^k).
BigradedPage truncate_columns(const BigradedPage& page, int k);

/// Ranks fixed by a feasible completion, keyed by (page, p, q).
struct RankAssignment {
  std::map<std::tuple<int, int, int>, std::size_t> ranks;
  BigradedPage limit;
};

/// Every assignment of the unknown ranks (on this and later pages, up to
/// `last_page`) whose limit page has diagonal sums equal to `abutment` on
/// `degrees` (all diagonals meeting the region when empty). Throws
/// PreconditionError when no assignment is feasible.
std::vector<RankAssignment> deduce_forced_ranks(const BigradedPage& page, const HomologyTable& abutment,
                                                const std::vector<int>& degrees = {}, int last_page = 0);

/// Pages E_1, E_2, ... up to the first page after which nothing changes.
struct SpectralRun {
  std::vector<BigradedPage> pages;
  /// Smallest r with E_r = E_infinity.
  int degeneration_page = 1;
  const BigradedPage& limit() const { return pages.back(); }
};

/// Runs the sequence from `first`, filling unknown ranks from the unique
/// feasible assignment against `abutment` (if any is needed). Throws
/// UnsupportedError when the data leave several possibilities.
SpectralRun run_spectral_sequence(const BigradedPage& first, const std::optional<HomologyTable>& abutment,
                                  const std::vector<int>& degrees = {});

SpectralRun run_hdr(const CurveSpec& c, int q_min = -8);

/// Hochschild-to-cyclic E1 page: cell (j, j - m) holds u^j HH_m for
/// 0 <= j <= columns and -1 <= m <= max_m; total cohomological degree
/// p + q = 2j - m is minus the homological degree of HN.
BigradedPage build_hc_ss(const CurveSpec& c, int columns = 8, int max_m = 24);
/// Rank of uB on u^j HH_m, the sum of HdR d1 ranks with p - q = m.
std::map<int, RankDatum> connes_ranks(const CurveSpec& c, int max_m);
SpectralRun run_hc(const CurveSpec& c, int columns = 8, int max_m = 24);

enum class SpectralKind { HodgeDeRham, HochschildCyclic };
int degeneration_page(const CurveSpec& c, SpectralKind which);

/// gr^k HN by cohomological degree; rows k <= 0 are shifted singular
/// cohomology, rows k >= 1 come from the column-truncated HdR sequence.
struct FiltrationChart {
  /// row k -> (cohomological degree -> dim)
  std::map<int, std::map<int, std::size_t>> rows;
  int degree_lo = 0;
  int degree_hi = 0;

  std::size_t at(int k, int degree) const;
  std::size_t column_sum(int degree) const;
};

/// Chart covering HN_n for homological n in [lo, hi].
FiltrationChart hn_chart(const CurveSpec& c, int lo = -4, int hi = 6);
HomologyTable hn_table(const CurveSpec& c, int lo = -4, int hi = 6);

enum class MapClass { Iso, Zero, Unclassified };
std::string map_class_name(MapClass m);
/// HN_n -> HH_n via the u^0 column of the HC sequence; only the nodal cubic
/// and the cuspidal cubic are classified.
MapClass hn_to_hh(const CurveSpec& c, int n);

/// Staircase text: rows q from top to bottom, columns p left to right.
std::string render_page(const BigradedPage& page, int p_lo, int p_hi, int q_lo, int q_hi);

}  // namespace curvehom
