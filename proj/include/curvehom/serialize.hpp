#pragma once

#include <string>
#include <string_view>

#include "curvehom/spectral.hpp"

namespace curvehom {

/// {"variables": [...], "relations": [...]}.
std::string ring_to_json(const RingPtr& ring);
RingPtr ring_from_json(std::string_view text);

/// Ring, shape and entries as nested arrays of polynomial strings.
std::string module_map_to_json(const ModuleMap& m);
ModuleMap module_map_from_json(std::string_view text);

/// Ring, degree window, ranks, differentials and basis labels. Writing the
/// parsed document again reproduces the input byte for byte.
std::string complex_to_json(const ChainComplex& c);
ChainComplex complex_from_json(std::string_view text);

/// {"model", "k", "cohomology": [{"i", "dim", "generators"}]}; infinite
/// dimensions are written as null with "infinite": true.
std::string local_to_json(SingularityModel model, unsigned k, bool with_generators);
std::string local_to_text(SingularityModel model, unsigned k, bool with_generators);

/// Degrees lo..hi, zeros included.
std::string table_to_json(const HomologyTable& t, int lo, int hi);
std::string table_to_csv(const HomologyTable& t, int lo, int hi);
std::string table_to_text(const HomologyTable& t, int lo, int hi);

std::string page_to_json(const BigradedPage& page, bool with_details = false);
/// Staircase plus one line per differential with a nonzero source.
std::string page_to_text(const BigradedPage& page, int p_lo, int p_hi, int q_lo, int q_hi, bool with_provenance);

std::string chart_to_json(const FiltrationChart& chart);
std::string chart_to_text(const FiltrationChart& chart);

}  // namespace curvehom
