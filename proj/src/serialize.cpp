#include "curvehom/serialize.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace curvehom {

using Json = nlohmann::ordered_json;

namespace {

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string("unexpected JSON layout: ") + e.what());
  }
}

Json ring_json(const RingPtr& ring) {
  Json j;
  j["variables"] = ring->variables();
  Json rel = Json::array();
  if (ring->is_quotient())
    for (const auto& p : ring->relations()) rel.push_back(p.to_string());
  j["relations"] = rel;
  return j;
}

RingPtr ring_of(const Json& j) {
  auto base = Ring::polynomial(j.at("variables").get<std::vector<std::string>>());
  std::vector<Polynomial> rel;
  for (const auto& r : j.at("relations")) rel.push_back(Polynomial::parse(base, r.get<std::string>()));
  return rel.empty() ? base : Ring::quotient(base, std::move(rel));
}

Json map_json(const ModuleMap& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = m.to_strings();
  return j;
}

ModuleMap map_of(const RingPtr& ring, const Json& j) {
  return ModuleMap::parse(ring, j.at("entries").get<std::vector<std::vector<std::string>>>(),
                          j.at("cols").get<std::size_t>());
}

Json dim_json(const Dimension& d) { return d.is_finite() ? Json(d.get()) : Json(nullptr); }

}  // namespace

std::string ring_to_json(const RingPtr& ring) { return ring_json(ring).dump(); }

RingPtr ring_from_json(std::string_view text) {
  const Json j = parse_document(text);
  return guarded([&] { return ring_of(j); });
}

std::string module_map_to_json(const ModuleMap& m) {
  Json j;
  j["ring"] = ring_json(m.ring());
  j["map"] = map_json(m);
  return j.dump();
}

ModuleMap module_map_from_json(std::string_view text) {
  const Json j = parse_document(text);
  return guarded([&] { return map_of(ring_of(j.at("ring")), j.at("map")); });
}

std::string complex_to_json(const ChainComplex& c) {
  Json j;
  j["ring"] = ring_json(c.ring());
  j["lo"] = c.lo();
  j["hi"] = c.hi();
  Json ranks = Json::array();
  for (int i = c.lo(); i <= c.hi(); ++i) ranks.push_back(c.rank(i));
  j["ranks"] = ranks;
  Json diffs = Json::array();
  for (int i = c.lo(); i < c.hi(); ++i) {
    Json d = map_json(c.differential(i));
    d["degree"] = i;
    diffs.push_back(d);
  }
  j["differentials"] = diffs;
  Json labels = Json::array();
  for (int i = c.lo(); i <= c.hi(); ++i) {
    auto names = c.labels(i);
    if (!names.empty()) labels.push_back(Json{{"degree", i}, {"names", names}});
  }
  j["labels"] = labels;
  return j.dump();
}

ChainComplex complex_from_json(std::string_view text) {
  const Json j = parse_document(text);
  return guarded([&] {
    const RingPtr ring = ring_of(j.at("ring"));
    const int lo = j.at("lo").get<int>();
    const auto ranks = j.at("ranks").get<std::vector<std::size_t>>();
    if (j.at("hi").get<int>() != lo + static_cast<int>(ranks.size()) - 1)
      throw InputError("degree window does not match the rank list");
    std::vector<ModuleMap> diffs;
    for (const auto& d : j.at("differentials")) diffs.push_back(map_of(ring, d));
    ChainComplex c(ring, lo, ranks, std::move(diffs));
    for (const auto& l : j.at("labels")) c.set_labels(l.at("degree").get<int>(), l.at("names"));
    return c;
  });
}

// -- local ----------------------------------------------------------------------

namespace {

struct LocalRow {
  int i;
  Dimension dim;
  std::vector<std::string> generators;
};

std::vector<LocalRow> local_rows(SingularityModel model, unsigned k, bool with_generators) {
  const DgModule m = wedge_power(model, k);
  std::vector<LocalRow> rows;
  for (int i = m.complex.hi(); i >= m.complex.lo(); --i) {
    LocalRow r{i, homology_dimension(m.complex, i), {}};
    if (with_generators)
      for (const auto& g : homology_generators(m.complex, i)) r.generators.push_back(m.render(i, g));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

std::string local_to_json(SingularityModel model, unsigned k, bool with_generators) {
  Json j;
  j["model"] = model_name(model);
  j["k"] = k;
  Json coh = Json::array();
  for (const auto& r : local_rows(model, k, with_generators)) {
    Json e;
    e["i"] = r.i;
    e["dim"] = dim_json(r.dim);
    if (!r.dim.is_finite()) e["infinite"] = true;
    e["generators"] = r.generators;
    coh.push_back(e);
  }
  j["cohomology"] = coh;
  return j.dump(2) + "\n";
}

std::string local_to_text(SingularityModel model, unsigned k, bool with_generators) {
  std::ostringstream out;
  out << "model " << model_name(model) << ", wedge^" << k << "\n";
  for (const auto& r : local_rows(model, k, with_generators)) {
    out << "H^" << r.i << " = " << r.dim.to_string() << "\n";
    for (const auto& g : r.generators) out << "    " << g << "\n";
  }
  return out.str();
}

// -- tables ---------------------------------------------------------------------

std::string table_to_json(const HomologyTable& t, int lo, int hi) {
  Json j;
  j["label"] = t.label;
  j["convention"] = t.convention;
  Json entries = Json::array();
  for (const auto& [d, v] : t.window(lo, hi)) entries.push_back(Json{{"degree", d}, {"dim", v}});
  j["entries"] = entries;
  if (t.inferred) {
    j["inferred"] = true;
    j["note"] = t.note;
  }
  return j.dump(2) + "\n";
}

std::string table_to_csv(const HomologyTable& t, int lo, int hi) {
  std::ostringstream out;
  out << "degree,dim\n";
  for (const auto& [d, v] : t.window(lo, hi)) out << d << "," << v << "\n";
  return out.str();
}

std::string table_to_text(const HomologyTable& t, int lo, int hi) {
  std::ostringstream out;
  const std::string sub = t.convention == "homological" ? "_" : "^";
  for (const auto& [d, v] : t.window(lo, hi)) {
    std::string head = t.label + sub + std::to_string(d);
    out << std::left << std::setw(10) << head << std::right << std::setw(4) << v << "\n";
  }
  if (t.inferred) out << "note: " << t.note << "\n";
  return out.str();
}

// -- pages ----------------------------------------------------------------------

std::string page_to_json(const BigradedPage& page, bool with_details) {
  Json j;
  j["page"] = page.page;
  Json entries = Json::array();
  for (const auto& [c, v] : page.entries) entries.push_back(Json{{"p", c.first}, {"q", c.second}, {"dim", v}});
  j["entries"] = entries;
  Json diffs = Json::array();
  for (const auto& [c, d] : page.differentials) {
    Json e{{"p", c.first}, {"q", c.second}};
    e["rank"] = d.rank ? Json(*d.rank) : Json(nullptr);
    e["provenance"] = provenance_name(d.provenance);
    if (with_details) {
      e["name"] = d.name;
      if (!d.detail.empty()) e["detail"] = d.detail;
      if (!d.citation.empty()) e["citation"] = d.citation;
    }
    diffs.push_back(e);
  }
  j["differentials"] = diffs;
  return j.dump(2) + "\n";
}

std::string page_to_text(const BigradedPage& page, int p_lo, int p_hi, int q_lo, int q_hi, bool with_provenance) {
  std::ostringstream out;
  out << render_page(page, p_lo, p_hi, q_lo, q_hi);
  bool header = false;
  for (const auto& [c, d] : page.differentials) {
    if (c.first < p_lo || c.first > p_hi || c.second < q_lo || c.second > q_hi || page.dim(c) == 0) continue;
    const bool named = d.name.rfind("d_", 0) != 0;
    if (!with_provenance && !named && d.rank.value_or(1) == 0) continue;
    if (!header) {
      out << "differentials d_" << page.page << ":\n";
      header = true;
    }
    const Cell t = page.target(c);
    out << "  " << d.name << " (" << c.first << "," << c.second << ") -> (" << t.first << "," << t.second
        << ") rank " << (d.rank ? std::to_string(*d.rank) : std::string("?"));
    if (with_provenance) {
      out << " [" << provenance_name(d.provenance) << "]";
      if (!d.detail.empty()) out << " " << d.detail;
      if (!d.citation.empty()) out << " " << d.citation;
    }
    out << "\n";
  }
  return out.str();
}

// -- chart ----------------------------------------------------------------------

std::string chart_to_json(const FiltrationChart& chart) {
  Json j;
  j["convention"] = "cohomological";
  j["degree_lo"] = chart.degree_lo;
  j["degree_hi"] = chart.degree_hi;
  Json rows = Json::array();
  for (const auto& [k, row] : chart.rows) {
    Json entries = Json::array();
    for (const auto& [d, v] : row) entries.push_back(Json{{"degree", d}, {"dim", v}});
    rows.push_back(Json{{"k", k}, {"entries", entries}});
  }
  j["rows"] = rows;
  Json sums = Json::array();
  for (int d = chart.degree_lo; d <= chart.degree_hi; ++d)
    sums.push_back(Json{{"degree", d}, {"dim", chart.column_sum(d)}});
  j["column_sums"] = sums;
  return j.dump(2) + "\n";
}

std::string chart_to_text(const FiltrationChart& chart) {
  std::ostringstream out;
  const int w = 4;
  out << std::left << std::setw(8) << "*" << std::right;
  for (int d = chart.degree_lo; d <= chart.degree_hi; ++d) out << std::setw(w) << d;
  out << "\n";
  for (auto it = chart.rows.begin(); it != chart.rows.end(); ++it) {
    out << std::left << std::setw(8) << ("gr^" + std::to_string(it->first)) << std::right;
    for (int d = chart.degree_lo; d <= chart.degree_hi; ++d) {
      const std::size_t v = chart.at(it->first, d);
      out << std::setw(w) << (v ? std::to_string(v) : std::string(""));
    }
    out << "\n";
  }
  out << std::left << std::setw(8) << "total" << std::right;
  for (int d = chart.degree_lo; d <= chart.degree_hi; ++d) out << std::setw(w) << chart.column_sum(d);
  out << "\n";
  return out.str();
}

}  // namespace curvehom
