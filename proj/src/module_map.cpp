#include "curvehom/module_map.hpp"

#include <algorithm>

#include "curvehom/groebner.hpp"

namespace curvehom {

ModuleMap::ModuleMap(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {
  if (!ring_) throw InputError("module map without a ring");
}

ModuleMap ModuleMap::from_columns(RingPtr ring, std::size_t rows, const std::vector<FreeElement>& cols) {
  ModuleMap m(std::move(ring), rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].rank() != rows) throw InputError("column rank does not match the target rank");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[c].coords[r]);
  }
  return m;
}

ModuleMap ModuleMap::from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows,
                               std::size_t cols) {
  ModuleMap m(std::move(ring), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

ModuleMap ModuleMap::parse(RingPtr ring, const std::vector<std::vector<std::string>>& rows,
                           std::size_t cols) {
  ModuleMap m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Polynomial::parse(ring, rows[r][c]));
  }
  return m;
}

ModuleMap ModuleMap::identity(RingPtr ring, std::size_t n) {
  ModuleMap m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Polynomial::constant(ring, 1));
  return m;
}

void ModuleMap::set(std::size_t r, std::size_t c, Polynomial p) {
  if (r >= rows_ || c >= cols_) throw InputError("matrix index out of range");
  if (!p.ring()) p = Polynomial(ring_);
  if (!p.ring()->same_variables(*ring_)) throw InputError("matrix entry from a different ring");
  entries_[r * cols_ + c] = p.with_ring(ring_);
}

FreeElement ModuleMap::column(std::size_t c) const {
  std::vector<Polynomial> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return FreeElement(std::move(out));
}

std::vector<FreeElement> ModuleMap::columns() const {
  std::vector<FreeElement> out;
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

FreeElement ModuleMap::apply(const FreeElement& v) const {
  if (v.rank() != cols_) throw InputError("vector rank does not match the map's source");
  FreeElement out = FreeElement::zero(ring_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v.coords[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!at(r, c).is_zero()) out.coords[r] += at(r, c) * v.coords[c].with_ring(ring_);
    }
  }
  return out;
}

ModuleMap ModuleMap::compose(const ModuleMap& other) const {
  if (other.rows_ != cols_) throw InputError("composition of incompatible maps");
  ModuleMap out(ring_, rows_, other.cols_);
  for (std::size_t c = 0; c < other.cols_; ++c) {
    FreeElement col = apply(other.column(c));
    for (std::size_t r = 0; r < rows_; ++r) out.set(r, c, col.coords[r]);
  }
  return out;
}

ModuleMap ModuleMap::concat(const ModuleMap& other) const {
  if (other.rows_ != rows_) throw InputError("concatenation needs equal row counts");
  ModuleMap out(ring_, rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, at(r, c));
    for (std::size_t c = 0; c < other.cols_; ++c) out.set(r, cols_ + c, other.at(r, c));
  }
  return out;
}

ModuleMap ModuleMap::with_ring(RingPtr ring) const {
  ModuleMap out(std::move(ring), rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].with_ring(out.ring_);
  return out;
}

bool ModuleMap::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool ModuleMap::is_zero_in_ring() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Polynomial& p) { return reduce_in_ring(p).is_zero(); });
}

bool ModuleMap::operator==(const ModuleMap& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::vector<std::vector<std::string>> ModuleMap::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r].push_back(at(r, c).to_string());
  return out;
}

std::string ModuleMap::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += at(r, c).to_string();
    }
    out += "]\n";
  }
  return out;
}

Polynomial reduce_in_ring(const Polynomial& p) {
  if (!p.ring() || !p.ring()->is_quotient()) return p;
  FreeElement v(std::vector<Polynomial>{p});
  // groebner_basis appends the relations of the quotient ring.
  auto gb = groebner_basis({FreeElement::zero(p.ring(), 1)});
  return normal_form(v, gb).coords[0];
}

FreeElement reduce_in_ring(const FreeElement& v) {
  FreeElement out = v;
  for (auto& c : out.coords) c = reduce_in_ring(c);
  return out;
}

}  // namespace curvehom
