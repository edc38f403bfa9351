#include "curvehom/cli.hpp"

#include <algorithm>
#include <ostream>
#include <regex>

#include "CLI11.hpp"
#include "curvehom/oracle.hpp"
#include "curvehom/serialize.hpp"
#include "curvehom/verify.hpp"
#include "json.hpp"

namespace curvehom {

namespace {

struct CurveOptions {
  std::string kind = "nodal";
  unsigned genus = 1;
  unsigned nodes = 1;
  CLI::Option* genus_opt = nullptr;
  CLI::Option* nodes_opt = nullptr;

  void attach(CLI::App* app) {
    app->add_option("--kind", kind, "nodal or cuspidal-cubic")->capture_default_str();
    genus_opt = app->add_option("--genus", genus, "arithmetic genus g")->capture_default_str();
    nodes_opt = app->add_option("--nodes", nodes, "number of nodes n (0 <= n <= g)")->capture_default_str();
  }

  CurveSpec spec() const {
    if (kind == "nodal" || kind == "node") return CurveSpec::nodal(genus, nodes);
    if (kind == "cuspidal-cubic" || kind == "cuspidal" || kind == "cusp") {
      const CurveSpec c = CurveSpec::cuspidal_cubic();
      if ((genus_opt->count() && genus != c.genus) || (nodes_opt->count() && nodes != c.nodes))
        throw InputError("the cuspidal cubic has genus 1 and no nodes");
      return c;
    }
    throw InputError("unknown curve kind '" + kind + "' (expected nodal or cuspidal-cubic)");
  }
};

struct Window {
  int lo = -4;
  int hi = 6;
};

Window parse_range(const std::string& text) {
  static const std::regex re(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw InputError("malformed range '" + text + "' (expected a..b)");
  Window w;
  try {
    w.lo = std::stoi(m[1]);
    w.hi = std::stoi(m[2]);
  } catch (const std::out_of_range&) {
    throw InputError("range bounds out of range in '" + text + "'");
  }
  if (w.lo > w.hi) throw InputError("empty range '" + text + "'");
  if (w.hi - w.lo > 200) throw InputError("range '" + text + "' is wider than 200 degrees");
  return w;
}

/// 0 for "inf", the page number otherwise.
int parse_page(const std::string& text) {
  if (text == "inf" || text == "infinity") return 0;
  static const std::regex re(R"(^[1-9]\d{0,2}$)");
  if (!std::regex_match(text, re)) throw InputError("malformed page '" + text + "' (expected a positive integer or inf)");
  return std::stoi(text);
}

RankOverride parse_override(const std::string& text) {
  static const std::regex re(R"(^(-?\d+),(-?\d+),(\d+)$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw InputError("malformed rank override '" + text + "' (expected p,q,rank)");
  return RankOverride{std::stoi(m[1]), std::stoi(m[2]), static_cast<std::size_t>(std::stoul(m[3]))};
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed, const std::string& verb) {
  for (const char* a : allowed)
    if (format == a) return;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw InputError("format '" + format + "' is not available for " + verb + " (use " + list + ")");
}

std::string emit_table(const HomologyTable& t, const Window& w, const std::string& format) {
  if (format == "json") return table_to_json(t, w.lo, w.hi);
  if (format == "csv") return table_to_csv(t, w.lo, w.hi);
  return table_to_text(t, w.lo, w.hi);
}

const BigradedPage& select_page(const SpectralRun& run, int page) {
  if (page == 0) return run.limit();
  const auto idx = static_cast<std::size_t>(page - 1);
  return idx < run.pages.size() ? run.pages[idx] : run.limit();
}

std::string emit_page(const CurveSpec& c, const SpectralRun& run, int page, const std::string& format,
                      bool provenance, int p_lo, int p_hi, int q_lo, int q_hi) {
  const BigradedPage& shown = select_page(run, page);
  if (format == "json") {
    auto j = nlohmann::ordered_json::parse(page_to_json(shown, provenance));
    j["curve"] = c.describe();
    j["degeneration_page"] = run.degeneration_page;
    j["convention"] = "cohomological (p, q)";
    return j.dump(2) + "\n";
  }
  std::string out = "curve: " + c.describe() + "\n";
  out += "degeneration page: " + std::to_string(run.degeneration_page) + "\n";
  if (page == 0) out += "showing E_inf = E_" + std::to_string(run.limit().page) + "\n";
  else if (page != shown.page) out += "E_" + std::to_string(page) + " = E_" + std::to_string(shown.page) + "\n";
  return out + page_to_text(shown, p_lo, p_hi, q_lo, q_hi, provenance);
}

std::string chart_to_csv(const FiltrationChart& chart) {
  std::string out = "k,degree,dim\n";
  for (const auto& [k, row] : chart.rows)
    for (const auto& [d, v] : row) out += std::to_string(k) + "," + std::to_string(d) + "," + std::to_string(v) + "\n";
  return out;
}

std::string local_to_csv(SingularityModel model, unsigned k) {
  const DgModule m = wedge_power(model, k);
  std::string out = "i,dim\n";
  for (int i = m.complex.hi(); i >= m.complex.lo(); --i) {
    const Dimension d = homology_dimension(m.complex, i);
    out += std::to_string(i) + "," + (d.is_finite() ? std::to_string(d.get()) : std::string("inf")) + "\n";
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hochschild, negative cyclic and de Rham invariants of nodal and cuspidal curves", "curvehom"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  std::string format = "text";
  std::string range = "-4..6";
  std::string page = "1";
  bool provenance = false;
  bool generators = false;
  std::string model = "nodal-cubic-chart";
  unsigned wedge = 2;
  std::string scope = "all";
  std::vector<std::string> overrides;

  auto add_format = [&](CLI::App* sub, const char* help) {
    sub->add_option("--format", format, help)->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
  };

  CurveOptions hh_curve, hn_curve, hdr_curve, hc_curve, chart_curve;

  auto* hh = app.add_subcommand("hh", "Hochschild homology HH_n (homological degrees)");
  hh_curve.attach(hh);
  hh->add_option("--range", range, "degree window a..b")->capture_default_str();
  add_format(hh, "text, json or csv");

  auto* hn = app.add_subcommand("hn", "Negative cyclic homology HN_n (homological degrees)");
  hn_curve.attach(hn);
  hn->add_option("--range", range, "degree window a..b")->capture_default_str();
  add_format(hn, "text, json or csv");

  auto* hdr = app.add_subcommand("hdr", "Hodge-to-de Rham spectral sequence page");
  hdr_curve.attach(hdr);
  hdr->add_option("--page", page, "page number or inf")->capture_default_str();
  hdr->add_flag("--show-provenance", provenance, "explain where every rank comes from");
  add_format(hdr, "text or json");

  auto* hc = app.add_subcommand("hc", "Hochschild-to-cyclic spectral sequence page");
  hc_curve.attach(hc);
  hc->add_option("--page", page, "page number or inf")->capture_default_str();
  hc->add_flag("--show-provenance", provenance, "explain where every rank comes from");
  add_format(hc, "text or json");

  auto* chart = app.add_subcommand("chart", "Filtration chart of HN (cohomological columns)");
  chart_curve.attach(chart);
  chart->add_option("--range", range, "homological degree window a..b")->capture_default_str();
  add_format(chart, "text, json or csv");

  auto* local = app.add_subcommand("local", "Cohomology of a derived wedge power in a local model");
  local->add_option("--model", model, "nodal-cubic-chart, crossing or cuspidal-cubic-chart")->capture_default_str();
  local->add_option("--wedge", wedge, "exterior power k (0..12)")->check(CLI::Range(0u, 12u))->capture_default_str();
  local->add_flag("--show-generators", generators, "print module generators of each cohomology group");
  add_format(local, "text, json or csv");

  auto* ver = app.add_subcommand("verify", "Re-derive every table and report pass/fail per check");
  ver->add_option("scope", scope, "all, nodal-cubic, general, cuspidal or local")->capture_default_str();
  ver->add_option("--inject-rank", overrides, "override an E1 differential rank p,q,rank (testing only)")
      ->group("");
  add_format(ver, "text or json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (hh->parsed()) {
      const Window w = parse_range(range);
      out << emit_table(hkr_hochschild(hh_curve.spec(), w.lo, w.hi), w, format);
    } else if (hn->parsed()) {
      const Window w = parse_range(range);
      out << emit_table(hn_table(hn_curve.spec(), w.lo, w.hi), w, format);
    } else if (hdr->parsed()) {
      require_format(format, {"text", "json"}, "hdr");
      const int r = parse_page(page);
      const CurveSpec c = hdr_curve.spec();
      out << emit_page(c, run_hdr(c), r, format, provenance, 0, 8, -8, 1);
    } else if (hc->parsed()) {
      require_format(format, {"text", "json"}, "hc");
      const int r = parse_page(page);
      const CurveSpec c = hc_curve.spec();
      out << emit_page(c, run_hc(c), r, format, provenance, 0, 6, -6, 7);
    } else if (chart->parsed()) {
      const Window w = parse_range(range);
      const FiltrationChart ch = hn_chart(chart_curve.spec(), w.lo, w.hi);
      if (format == "json") out << chart_to_json(ch);
      else if (format == "csv") out << chart_to_csv(ch);
      else out << chart_to_text(ch);
    } else if (local->parsed()) {
      const SingularityModel m = parse_model(model);
      if (format == "json") out << local_to_json(m, wedge, generators);
      else if (format == "csv") {
        if (generators) throw InputError("--show-generators is not available with csv output");
        out << local_to_csv(m, wedge);
      } else out << local_to_text(m, wedge, generators);
    } else if (ver->parsed()) {
      require_format(format, {"text", "json"}, "verify");
      const VerifyScope s = parse_scope(scope);
      VerifyOptions options;
      for (const auto& o : overrides) options.hdr_overrides.push_back(parse_override(o));
      options.oracle_degree = oracle_degree();
      const VerifyReport report = verify(s, options);
      out << (format == "json" ? report.to_json() : report.to_text());
      return report.ok() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace curvehom
