#include "curvehom/spectral.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace curvehom {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Computed: return "computed";
    case Provenance::Rule: return "rule";
    case Provenance::Deduced: return "deduced";
    case Provenance::Unknown: return "unknown";
  }
  return "unknown";
}

RankDatum RankDatum::computed(std::size_t rank, std::string name, std::string detail) {
  return RankDatum{rank, Provenance::Computed, std::move(name), std::move(detail), {}};
}

RankDatum RankDatum::rule(std::size_t rank, std::string name, std::string citation) {
  return RankDatum{rank, Provenance::Rule, std::move(name), {}, std::move(citation)};
}

RankDatum RankDatum::deduced(std::size_t rank, std::string name, std::string detail) {
  return RankDatum{rank, Provenance::Deduced, std::move(name), std::move(detail), {}};
}

RankDatum RankDatum::unknown(std::string name) {
  return RankDatum{std::nullopt, Provenance::Unknown, std::move(name), {}, {}};
}

namespace {

const char* const kBeyondWindow = "targets outside the computed region are treated as zero";

std::string cell_name(const Cell& c) { return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")"; }

}  // namespace

// -- BigradedPage -------------------------------------------------------------

std::size_t BigradedPage::dim(const Cell& c) const {
  auto it = entries.find(c);
  return it == entries.end() ? 0 : it->second;
}

std::size_t BigradedPage::out_rank(const Cell& source) const {
  auto it = differentials.find(source);
  if (it == differentials.end()) return 0;
  if (!it->second.known()) throw PreconditionError("rank of the differential at " + cell_name(source) + " is unknown");
  return *it->second.rank;
}

std::vector<Cell> BigradedPage::unknowns() const {
  std::vector<Cell> out;
  for (const auto& [c, d] : differentials)
    if (!d.known()) out.push_back(c);
  return out;
}

bool BigradedPage::all_zero_differentials() const {
  return std::all_of(differentials.begin(), differentials.end(),
                     [](const auto& kv) { return kv.second.known() && *kv.second.rank == 0; });
}

std::size_t BigradedPage::diagonal(int degree) const {
  std::size_t s = 0;
  for (const auto& [c, v] : entries)
    if (c.first + c.second == degree) s += v;
  return s;
}

long BigradedPage::euler_characteristic() const {
  long s = 0;
  for (const auto& [c, v] : entries) s += ((c.first + c.second) % 2 == 0 ? 1 : -1) * static_cast<long>(v);
  return s;
}

namespace {

void initialize_differentials(BigradedPage& page, const std::string& prefix) {
  for (const auto& [c, v] : page.entries) {
    if (v == 0 || page.differentials.contains(c)) continue;
    const Cell t = page.target(c);
    const std::string name = prefix + "_" + std::to_string(page.page) + cell_name(c);
    if (!page.region.contains(t)) page.differentials.emplace(c, RankDatum::rule(0, name, kBeyondWindow));
    else if (page.dim(t) == 0) page.differentials.emplace(c, RankDatum::deduced(0, name, "target vanishes"));
    else page.differentials.emplace(c, RankDatum::unknown(name));
  }
}

}  // namespace

BigradedPage turn_page(const BigradedPage& p) {
  BigradedPage next;
  next.page = p.page + 1;
  next.region = p.region;
  for (const auto& [c, v] : p.entries) {
    const std::size_t out = p.out_rank(c);
    const Cell src{c.first - p.page, c.second + p.page - 1};
    const std::size_t in = p.out_rank(src);
    if (out + in > v)
      throw PreconditionError("inconsistent rank data: entry " + cell_name(c) + " on page " + std::to_string(p.page) +
                              " has dimension " + std::to_string(v) + " but ranks " + std::to_string(out) + " out, " +
                              std::to_string(in) + " in");
    if (v - out - in) next.entries[c] = v - out - in;
  }
  for (const auto& [c, d] : p.differentials) {
    (void)d;
    const std::size_t out = p.out_rank(c);
    if (out > 0 && !p.entries.contains(c))
      throw PreconditionError("nonzero differential from the empty cell " + cell_name(c));
  }
  initialize_differentials(next, "d");
  return next;
}

// -- HdR ------------------------------------------------------------------------

namespace {

std::size_t de_rham_local_rank(SingularityModel model, unsigned weight, std::string& detail) {
  const auto& ranks = local_invariants(model).de_rham_rank;
  if (weight <= kLocalMaxWeight) return ranks.at(weight);
  detail += "; weight beyond the computed table, extended by shift periodicity";
  return ranks.at(kLocalMaxWeight);
}

}  // namespace

BigradedPage build_hdr_e1(const CurveSpec& c, int q_min) {
  c.validate();
  if (q_min > -1) q_min = -1;
  BigradedPage page;
  page.page = 1;
  page.region.p_min = 0;
  page.region.p_max = 2 - q_min;
  page.region.q_min = q_min;
  page.region.q_max = 1;
  for (int p = page.region.p_min; p <= page.region.p_max; ++p) {
    const HomologyTable t = wedge_hypercohomology(c, static_cast<unsigned>(p));
    for (int q = q_min; q <= 1; ++q)
      if (t.dim(q)) page.entries[{p, q}] = t.dim(q);
  }

  const unsigned points = c.singular_points();
  page.differentials[{0, 0}] = RankDatum::rule(
      0, "alpha",
      "H^0 of a connected curve is spanned by the constant 1, which is closed; the degree-0 abutment is "
      "one-dimensional, so no differential acts on H^0(O)");
  if (c.kind == CurveKind::Nodal) {
    page.differentials[{0, 1}] = RankDatum::rule(
        0, "sigma",
        "H^1(O) -> H^1(L) factors through the normalization, whose Hodge-to-de Rham sequence degenerates at E1");
  } else {
    page.differentials[{0, 1}] = RankDatum::unknown("sigma");
  }

  {
    std::string detail;
    std::size_t local = 0;
    if (c.kind == CurveKind::Nodal) {
      local = crossing_composite().rank();
      detail = std::to_string(points) + " x rank of 1 -> x dy -> dx^dy at a coordinate crossing (" +
               std::to_string(local) + ")";
    } else {
      local = local_invariants(c.model()).torsion_composite_rank;
      detail = "rank of d^dR on the torsion of H^0(L) at the cusp (" + std::to_string(local) + ")";
    }
    page.differentials[{1, 0}] = RankDatum::computed(points * local, "gamma", detail);
  }

  for (int k = 1; k + 1 <= page.region.p_max && -k >= q_min; ++k) {
    const unsigned weight = static_cast<unsigned>(k + 1);
    std::string detail = std::to_string(points) + " x rank of H^" + std::to_string(-k) + "(d^dR): wedge^" +
                         std::to_string(weight) + " -> wedge^" + std::to_string(weight + 1) + " in the " +
                         model_name(c.model()) + " model";
    const std::size_t local = de_rham_local_rank(c.model(), weight, detail);
    page.differentials[{k + 1, -k}] =
        RankDatum::computed(points * local, "beta_" + std::to_string(k), detail + " (" + std::to_string(local) + ")");
  }

  // Everything else has a vanishing target or leaves the region.
  for (const auto& [cell, v] : page.entries) {
    if (page.differentials.contains(cell)) continue;
    const Cell t = page.target(cell);
    const std::string name = "d_1" + cell_name(cell);
    if (!page.region.contains(t)) page.differentials.emplace(cell, RankDatum::rule(0, name, kBeyondWindow));
    else if (page.dim(t) == 0) page.differentials.emplace(cell, RankDatum::deduced(0, name, "target vanishes"));
    else page.differentials.emplace(cell, RankDatum::unknown(name));
  }
  // Clamp the named differentials whose source is empty (n = 0 and similar).
  for (auto& [cell, d] : page.differentials)
    if (page.dim(cell) == 0 && d.known() && *d.rank != 0)
      throw PreconditionError("nonzero rank on an empty cell " + cell_name(cell));
  for (auto it = page.differentials.begin(); it != page.differentials.end();) {
    if (page.dim(it->first) == 0 && !it->second.known()) {
      it->second = RankDatum::deduced(0, it->second.name, "source vanishes");
    }
    ++it;
  }
  return page;
}

BigradedPage truncate_columns(const BigradedPage& page, int k) {
  BigradedPage out;
  out.page = page.page;
  out.region = page.region;
  out.region.p_min = std::max(out.region.p_min, k);
  for (const auto& [c, v] : page.entries)
    if (c.first >= k) out.entries[c] = v;
  for (const auto& [c, d] : page.differentials)
    if (c.first >= k) out.differentials[c] = d;
  return out;
}

// -- forced ranks ---------------------------------------------------------------

namespace {

int default_last_page(const BigradedPage& page) {
  return std::max(page.page, page.region.p_max - page.region.p_min + 1);
}

std::vector<int> diagonal_degrees(const BigradedPage& page, const HomologyTable& abutment) {
  std::set<int> out;
  for (const auto& [c, v] : page.entries) out.insert(c.first + c.second);
  for (const auto& [d, v] : abutment.entries) out.insert(d);
  return {out.begin(), out.end()};
}

struct Search {
  const HomologyTable& abutment;
  std::vector<int> degrees;
  int last_page;
  std::vector<RankAssignment> results;
  std::size_t budget = 200000;
};

void explore(BigradedPage page, std::map<std::tuple<int, int, int>, std::size_t> ranks, Search& s) {
  while (true) {
    if (s.budget == 0) throw UnsupportedError("rank search exceeded its budget");
    --s.budget;
    const auto unknown = page.unknowns();
    if (!unknown.empty()) {
      const Cell c = unknown.front();
      const std::size_t bound = std::min(page.dim(c), page.dim(page.target(c)));
      for (std::size_t r = 0; r <= bound; ++r) {
        BigradedPage copy = page;
        auto& d = copy.differentials[c];
        d.rank = r;
        d.provenance = Provenance::Deduced;
        auto next = ranks;
        next[{page.page, c.first, c.second}] = r;
        explore(std::move(copy), std::move(next), s);
      }
      return;
    }
    if (page.page >= s.last_page) break;
    try {
      page = turn_page(page);
    } catch (const PreconditionError&) {
      return;
    }
  }
  for (int d : s.degrees)
    if (page.diagonal(d) != s.abutment.dim(d)) return;
  s.results.push_back(RankAssignment{std::move(ranks), std::move(page)});
}

}  // namespace

std::vector<RankAssignment> deduce_forced_ranks(const BigradedPage& page, const HomologyTable& abutment,
                                                const std::vector<int>& degrees, int last_page) {
  Search s{abutment, degrees.empty() ? diagonal_degrees(page, abutment) : degrees,
           last_page > 0 ? last_page : default_last_page(page), {}};
  explore(page, {}, s);
  if (s.results.empty())
    throw PreconditionError("no assignment of the unknown ranks is consistent with the " + abutment.label +
                            " abutment");
  return std::move(s.results);
}

SpectralRun run_spectral_sequence(const BigradedPage& first, const std::optional<HomologyTable>& abutment,
                                  const std::vector<int>& degrees) {
  SpectralRun run;
  BigradedPage page = first;
  const int last = default_last_page(first);
  while (true) {
    const auto unknown = page.unknowns();
    if (!unknown.empty()) {
      if (!abutment)
        throw UnsupportedError("page " + std::to_string(page.page) + " has unknown ranks and no abutment to fix them");
      const auto feasible = deduce_forced_ranks(page, *abutment, degrees, last);
      for (const Cell& c : unknown) {
        const auto key = std::make_tuple(page.page, c.first, c.second);
        const std::size_t r = feasible.front().ranks.at(key);
        for (const auto& a : feasible)
          if (a.ranks.at(key) != r)
            throw UnsupportedError("rank at " + cell_name(c) + " on page " + std::to_string(page.page) +
                                   " is not determined by the abutment");
        auto& d = page.differentials[c];
        d.rank = r;
        d.provenance = Provenance::Deduced;
        d.detail = "forced by convergence to " + abutment->label;
      }
    }
    run.pages.push_back(page);
    if (page.page >= last) break;
    page = turn_page(page);
  }
  int last_nonzero = 0;
  for (const auto& p : run.pages)
    if (!p.all_zero_differentials()) last_nonzero = p.page;
  run.degeneration_page = last_nonzero + 1;
  const auto keep = static_cast<std::size_t>(std::max(1, run.degeneration_page));
  if (run.pages.size() > keep) run.pages.resize(keep);
  if (abutment) {
    const auto& lim = run.limit();
    for (int d : degrees.empty() ? diagonal_degrees(lim, *abutment) : degrees)
      if (lim.diagonal(d) != abutment->dim(d))
        throw PreconditionError("limit page disagrees with " + abutment->label + " in degree " + std::to_string(d));
  }
  return run;
}

SpectralRun run_hdr(const CurveSpec& c, int q_min) {
  return run_spectral_sequence(build_hdr_e1(c, q_min), singular_cohomology(c));
}

// -- Hochschild to cyclic -------------------------------------------------------

std::map<int, RankDatum> connes_ranks(const CurveSpec& c, int max_m) {
  const SpectralRun hdr = run_hdr(c, -(max_m / 2 + 3));
  const BigradedPage& e1 = hdr.pages.front();
  std::map<int, RankDatum> out;
  for (int m = -1; m <= max_m; ++m) {
    std::size_t total = 0;
    std::vector<std::string> parts;
    bool any_deduced = false, any_computed = false;
    for (const auto& [cell, d] : e1.differentials) {
      if (cell.first - cell.second != m) continue;
      total += *d.rank;
      if (*d.rank == 0) continue;
      parts.push_back(d.name + "=" + std::to_string(*d.rank));
      any_deduced |= d.provenance == Provenance::Deduced;
      any_computed |= d.provenance == Provenance::Computed;
    }
    std::string detail = "sum of Hodge-to-de Rham d1 ranks on HKR pieces of HH_" + std::to_string(m);
    if (!parts.empty()) {
      detail += ":";
      for (const auto& p : parts) detail += " " + p;
    }
    const std::string name = "uB_" + std::to_string(m);
    if (any_deduced) out[m] = RankDatum::deduced(total, name, detail);
    else if (any_computed || total == 0) out[m] = RankDatum::computed(total, name, detail);
    else out[m] = RankDatum::rule(total, name, detail);
  }
  return out;
}

BigradedPage build_hc_ss(const CurveSpec& c, int columns, int max_m) {
  c.validate();
  const HomologyTable hh = hkr_hochschild(c, -1, max_m);
  const auto ranks = connes_ranks(c, max_m);
  BigradedPage page;
  page.page = 1;
  page.region.p_min = 0;
  page.region.p_max = columns;
  page.region.diff_min = -1;
  page.region.diff_max = max_m;
  for (int j = 0; j <= columns; ++j)
    for (int m = -1; m <= max_m; ++m) {
      const std::size_t v = hh.dim(m);
      if (v == 0) continue;
      const Cell cell{j, j - m};
      page.entries[cell] = v;
      RankDatum d = ranks.at(m);
      if (*d.rank > 0 && m + 1 <= max_m && hh.dim(m + 1) == 0)
        throw PreconditionError("uB has nonzero rank into a vanishing HH_" + std::to_string(m + 1));
      page.differentials[cell] = d;
    }
  return page;
}

namespace {

// Homological HN degrees whose diagonals, and the differentials touching
// them, stay away from the truncated edges of the HC region.
std::pair<int, int> hc_interior(int columns, int max_m) { return {-2 * columns + 4, max_m - 2 * columns - 4}; }

}  // namespace

SpectralRun run_hc(const CurveSpec& c, int columns, int max_m) {
  const auto [lo, hi] = hc_interior(columns, max_m);
  const HomologyTable hn = hn_table(c, lo, hi);
  HomologyTable abutment;
  abutment.label = "HN";
  std::vector<int> degrees;
  for (int t = lo; t <= hi; ++t) {
    abutment.set(-t, hn.dim(t));
    degrees.push_back(-t);
  }
  return run_spectral_sequence(build_hc_ss(c, columns, max_m), abutment, degrees);
}

int degeneration_page(const CurveSpec& c, SpectralKind which) {
  return which == SpectralKind::HodgeDeRham ? run_hdr(c).degeneration_page : run_hc(c).degeneration_page;
}

// -- HN chart -------------------------------------------------------------------

std::size_t FiltrationChart::at(int k, int degree) const {
  auto r = rows.find(k);
  if (r == rows.end()) return 0;
  auto it = r->second.find(degree);
  return it == r->second.end() ? 0 : it->second;
}

std::size_t FiltrationChart::column_sum(int degree) const {
  std::size_t s = 0;
  for (const auto& [k, row] : rows) {
    auto it = row.find(degree);
    if (it != row.end()) s += it->second;
  }
  return s;
}

FiltrationChart hn_chart(const CurveSpec& c, int lo, int hi) {
  if (lo > hi) throw InputError("empty degree window");
  FiltrationChart chart;
  chart.degree_lo = -hi;
  chart.degree_hi = -lo;
  auto in_window = [&](int d) { return d >= chart.degree_lo && d <= chart.degree_hi; };

  // gr^k for k <= 0: H^d_sing placed in degree d - 2k.
  const HomologyTable sing = singular_cohomology(c);
  for (int k = std::min(0, -(std::abs(chart.degree_hi) / 2) - 2); k <= 0; ++k)
    for (const auto& [d, v] : sing.entries)
      if (v && in_window(d - 2 * k)) chart.rows[k][d - 2 * k] = v;

  // gr^k for k >= 1: limit of the HdR sequence restricted to columns >= k.
  const int k_max = std::max(1, (2 - chart.degree_lo) / 2 + 1);
  const SpectralRun full = run_hdr(c, -(k_max + 3));
  const BigradedPage& e1 = full.pages.front();
  for (int k = 1; k <= k_max; ++k) {
    const SpectralRun part = run_spectral_sequence(truncate_columns(e1, k), std::nullopt);
    for (const auto& [cell, v] : part.limit().entries) {
      const int d = cell.first + cell.second - 2 * k;
      if (v && in_window(d)) chart.rows[k][d] += v;
    }
  }
  return chart;
}

HomologyTable hn_table(const CurveSpec& c, int lo, int hi) {
  const FiltrationChart chart = hn_chart(c, lo, hi);
  HomologyTable t;
  t.label = "HN";
  t.convention = "homological";
  for (int n = lo; n <= hi; ++n) t.set(n, chart.column_sum(-n));
  const HomologyTable h1 = cotangent_cohomology(c);
  t.inferred = h1.inferred;
  if (h1.inferred) t.note = "uses inferred sheaf-level dimensions: " + h1.note;
  return t;
}

std::string map_class_name(MapClass m) {
  switch (m) {
    case MapClass::Iso: return "iso";
    case MapClass::Zero: return "zero";
    case MapClass::Unclassified: return "unclassified";
  }
  return "unclassified";
}

MapClass hn_to_hh(const CurveSpec& c, int n) {
  c.validate();
  if (!c.is_nodal_cubic() && c.kind != CurveKind::CuspidalCubic) return MapClass::Unclassified;
  const int columns = std::max(8, std::abs(n) / 2 + 4);
  const int max_m = 2 * columns + std::max(8, n + 2);
  const SpectralRun hc = run_hc(c, columns, max_m);
  const std::size_t edge = hc.limit().dim({0, -n});
  const std::size_t hh = hkr_hochschild(c, n, n).dim(n);
  const std::size_t hn = hn_table(c, n, n).dim(n);
  if (edge == 0) return MapClass::Zero;
  if (edge == hh && edge == hn) return MapClass::Iso;
  return MapClass::Unclassified;
}

// -- text -----------------------------------------------------------------------

std::string render_page(const BigradedPage& page, int p_lo, int p_hi, int q_lo, int q_hi) {
  std::ostringstream out;
  const int width = 4;
  out << "E_" << page.page << "\n";
  out << std::string(static_cast<std::size_t>(width), ' ') << "|";
  for (int p = p_lo; p <= p_hi; ++p) {
    std::string h = "p=" + std::to_string(p);
    out << std::string(static_cast<std::size_t>(std::max(1, width + 1 - static_cast<int>(h.size()))), ' ') << h;
  }
  out << "\n";
  for (int q = q_hi; q >= q_lo; --q) {
    std::string label = "q=" + std::to_string(q);
    out << label << std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(label.size()))), ' ')
        << "|";
    for (int p = p_lo; p <= p_hi; ++p) {
      std::string cell = page.region.contains({p, q}) ? std::to_string(page.dim({p, q})) : "";
      if (cell == "0") cell = ".";
      out << std::string(static_cast<std::size_t>(std::max(1, width + 1 - static_cast<int>(cell.size()))), ' ')
          << cell;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace curvehom
