#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "curvehom/spectral.hpp"

namespace curvehom {

enum class VerifyScope { All, NodalCubic, General, Cuspidal, Local };
std::string scope_name(VerifyScope s);
/// "all", "nodal-cubic", "general", "cuspidal", "local"; InputError otherwise.
VerifyScope parse_scope(std::string_view name);

struct CheckResult {
  std::string scope;
  std::string name;
  /// The mathematical statement the check re-derives.
  std::string citation;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  std::size_t failures() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// Replaces the rank of an E1 differential of every Hodge-to-de Rham page
/// built during verification. Used to exercise the failure path.
struct RankOverride {
  int p = 0;
  int q = 0;
  std::size_t rank = 0;
};

struct VerifyOptions {
  std::vector<RankOverride> hdr_overrides;
  /// 0 selects oracle_degree().
  unsigned oracle_degree = 0;
};

VerifyReport verify(VerifyScope scope, const VerifyOptions& options = {});

/// The genus/node pairs every general check runs over.
const std::vector<CurveSpec>& matrix_specs();

}  // namespace curvehom
