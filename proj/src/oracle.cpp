#include "curvehom/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <string>

namespace curvehom {

bool OracleCount::agrees_with(const Dimension& d) const {
  return d.is_finite() ? !grows() && dim == d.get() : grows();
}

unsigned oracle_degree() {
  const char* env = std::getenv("CURVEHOM_ORACLE_DEGREE");
  if (env == nullptr || *env == '\0') return 8;
  try {
    const unsigned long v = std::stoul(env);
    if (v >= 2 && v <= 40) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  throw InputError(std::string("CURVEHOM_ORACLE_DEGREE must be an integer in [2, 40], got ") + env);
}

namespace {

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;  // sorted by index

// Coordinates (monomial, position) with a stable numbering; higher degree
// gets a smaller index so that elimination pivots on top-degree terms.
class Coordinates {
 public:
  std::size_t index(const Monomial& m, std::size_t position) {
    Key k{m.degree(), {}, position};
    for (std::size_t v = 0; v < kMaxVariables; ++v) k.exps[v] = m[v];
    auto [it, fresh] = ids_.emplace(k, ids_.size());
    (void)fresh;
    return it->second;
  }
  /// Renumbers so that the order matches the (degree desc, ...) key order.
  std::vector<std::size_t> ranking() const {
    std::vector<std::size_t> rank(ids_.size());
    std::size_t r = 0;
    for (const auto& [k, id] : ids_) rank[id] = r++;
    return rank;
  }
  std::vector<unsigned> degrees() const {
    std::vector<unsigned> out(ids_.size());
    for (const auto& [k, id] : ids_) out[id] = k.degree;
    return out;
  }

 private:
  struct Key {
    unsigned degree;
    std::array<unsigned, kMaxVariables> exps;
    std::size_t position;
    bool operator<(const Key& o) const {
      if (degree != o.degree) return degree > o.degree;
      if (exps != o.exps) return exps > o.exps;
      return position < o.position;
    }
  };
  std::map<Key, std::size_t> ids_;
};

// Incremental row echelon form of sparse vectors, pivoting on the smallest index.
class Echelon {
 public:
  /// Returns true when v was independent of the vectors added so far.
  bool add(SparseVec v) {
    while (!v.empty()) {
      auto it = pivots_.find(v.front().first);
      if (it == pivots_.end()) {
        const Rational lead = v.front().second;
        for (auto& [i, c] : v) c /= lead;
        pivots_.emplace(v.front().first, std::move(v));
        return true;
      }
      v = subtract(v, v.front().second, it->second);
    }
    return false;
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  static SparseVec subtract(const SparseVec& a, const Rational& c, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, -c * b[j].second);
        ++j;
      } else {
        Rational s = a[i].second - c * b[j].second;
        if (s != 0) out.emplace_back(a[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return out;
  }
  std::map<std::size_t, SparseVec> pivots_;
};

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t v, unsigned left) -> void {
    if (v == nvars) {
      out.emplace_back(std::span<const unsigned>(e.data(), e.size()));
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      e[v] = a;
      self(self, v + 1, left - a);
    }
    e[v] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

// Images of m * e_j under d for every monomial of degree <= bound, as raw
// (monomial, position, coefficient) lists.
using RawVec = std::vector<std::tuple<Monomial, std::size_t, Rational>>;

std::vector<RawVec> images(const ModuleMap& d, std::size_t nvars, unsigned bound) {
  std::vector<RawVec> out;
  for (const Monomial& m : monomials_up_to(nvars, bound))
    for (std::size_t j = 0; j < d.cols(); ++j) {
      RawVec v;
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (const auto& [mono, coef] : d.at(r, j).terms()) v.emplace_back(mono * m, r, coef);
      out.push_back(std::move(v));
    }
  return out;
}

SparseVec to_sparse(const RawVec& raw, Coordinates& coords, const std::vector<std::size_t>* ranking,
                    const std::vector<unsigned>* degrees, unsigned above) {
  std::map<std::size_t, Rational> acc;
  for (const auto& [m, pos, c] : raw) {
    std::size_t id = coords.index(m, pos);
    if (degrees && (*degrees)[id] <= above) continue;
    acc[ranking ? (*ranking)[id] : id] += c;
  }
  SparseVec v;
  for (auto& [i, c] : acc)
    if (c != 0) v.emplace_back(i, std::move(c));
  return v;
}

std::size_t truncated_count(const ChainComplex& c, int i, unsigned degree, unsigned slack) {
  const std::size_t nvars = c.ring()->variable_count();
  // Cycles of degree <= D: dim V_D - rank(d^i on V_D).
  std::size_t cycles = 0;
  {
    const ModuleMap d = c.differential(i);
    const auto raw = images(d, nvars, degree);
    Coordinates coords;
    for (const auto& v : raw)
      for (const auto& [m, pos, coef] : v) coords.index(m, pos);
    const auto ranking = coords.ranking();
    Echelon e;
    for (const auto& v : raw) e.add(to_sparse(v, coords, &ranking, nullptr, 0));
    cycles = raw.size() - e.rank();
  }
  // Boundaries inside V_D: rank U - rank of U projected to degrees > D.
  std::size_t boundaries = 0;
  if (c.rank(i - 1) > 0 && c.rank(i) > 0) {
    const auto raw = images(c.differential(i - 1), nvars, degree + slack);
    Coordinates coords;
    for (const auto& v : raw)
      for (const auto& [m, pos, coef] : v) coords.index(m, pos);
    const auto ranking = coords.ranking();
    const auto degrees = coords.degrees();
    Echelon all, high;
    for (const auto& v : raw) {
      all.add(to_sparse(v, coords, &ranking, nullptr, 0));
      high.add(to_sparse(v, coords, &ranking, &degrees, degree));
    }
    boundaries = all.rank() - high.rank();
  }
  return cycles - boundaries;
}

}  // namespace

OracleCount oracle_homology(const ChainComplex& c, int i, unsigned degree, unsigned slack) {
  if (c.ring()->is_quotient()) throw UnsupportedError("the truncation oracle needs a polynomial ring");
  if (degree < 1) throw InputError("oracle degree must be positive");
  OracleCount r;
  r.degree = degree;
  r.dim = truncated_count(c, i, degree, slack);
  r.dim_below = truncated_count(c, i, degree - 1, slack);
  return r;
}

}  // namespace curvehom
