#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hilbloc/acceptance.hpp"
#include "hilbloc/errors.hpp"
#include "hilbloc/geometry_spec.hpp"
#include "hilbloc/identities.hpp"
#include "hilbloc/localize.hpp"
#include "hilbloc/pipelines.hpp"
#include "hilbloc/report.hpp"
#include "hilbloc/universal.hpp"

using namespace hilbloc;

namespace {

struct Common {
  std::string format = "plain";
  std::string out;
  int workers = 1;
  std::string directions;
};

struct GeometryArgs {
  std::string surface;
  std::int64_t a = 0;
  std::string bundle = "0";
  std::optional<int> relative;
  std::string spec;
};

int default_workers() {
  if (const char* w = std::getenv("HILBLOC_WORKERS")) {
    int n = std::atoi(w);
    if (n >= 1) return n;
  }
  return 1;
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "plain, csv or json")->check(CLI::IsMember({"plain", "csv", "json"}));
  app->add_option("--out", c.out, "write to this path instead of stdout");
  app->add_option("--workers", c.workers, "worker threads (default $HILBLOC_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  app->add_option("--directions", c.directions,
                  "specialization slopes, e.g. 2,3/2,5/3; fiber values cycle through the same list");
}

void add_geometry(CLI::App* app, GeometryArgs& g) {
  app->add_option("--surface", g.surface, "p2, p1xp1, hirzebruch or tot")
      ->check(CLI::IsMember({"p2", "p1xp1", "hirzebruch", "tot"}));
  app->add_option("-a,--a", g.a, "Hirzebruch index or degree of the normal bundle");
  app->add_option("--bundle", g.bundle, "m (p2), x,y (p1xp1, hirzebruch), d[,k] (tot)");
  app->add_option("--relative", g.relative, "index of the relative divisor ray");
  app->add_option("--spec", g.spec, "geometry spec file (JSON)");
}

Geometry resolve(const GeometryArgs& g) {
  if (!g.spec.empty()) {
    if (!g.surface.empty()) throw std::invalid_argument("--spec and --surface are exclusive");
    Geometry out = load_geometry_spec(g.spec);
    if (g.relative) out.relative = g.relative;
    return out;
  }
  if (g.surface.empty()) throw std::invalid_argument("give --surface or --spec");
  return named_geometry(g.surface, g.a, g.bundle, g.relative);
}

IntegrateOptions integrate_options(const Common& c, bool expect_pole = false) {
  IntegrateOptions o;
  o.workers = c.workers;
  o.expect_pole = expect_pole;
  if (!c.directions.empty()) {
    std::vector<BigRational> rho;
    std::stringstream ss(c.directions);
    for (std::string tok; std::getline(ss, tok, ',');) rho.push_back(parse_rational(tok));
    if (rho.size() < 2) throw std::invalid_argument("--directions needs at least two slopes");
    o.directions.clear();
    for (std::size_t i = 0; i < rho.size(); ++i) o.directions.push_back({rho[i], rho[(i + 1) % rho.size()]});
  }
  return o;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error("cannot write " + c.out);
  f << text;
}

std::string compare_note(const QSeries& got, const QSeries& want, const std::string& what, bool& ok) {
  int k = first_difference(got, want);
  if (k < 0) return "= " + what;
  ok = false;
  return "differs from " + what + " at q^" + std::to_string(k) + ": " + to_string(got[k]) + " vs " +
         to_string(want[k]);
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    std::int64_t d = std::stoll(s);
    return {d, d};
  }
  std::int64_t lo = std::stoll(s.substr(0, dots)), hi = std::stoll(s.substr(dots + 2));
  if (hi < lo) throw std::invalid_argument("empty degree range " + s);
  return {lo, hi};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tautological integrals on Hilbert schemes of toric surfaces by localization"};
  app.require_subcommand(1);

  Common common;
  common.workers = default_workers();
  GeometryArgs geo;
  std::string kind = "T";
  int order = 3;
  bool expect_pole = false;

  auto* series_cmd = app.add_subcommand("series", "generating series Z_A(S, M) up to q^order");
  add_common(series_cmd, common);
  add_geometry(series_cmd, geo);
  series_cmd->add_option("--kind", kind, "T, Seg or L")->check(CLI::IsMember({"T", "Seg", "L"}));
  series_cmd->add_option("--order", order)->check(CLI::NonNegativeNumber);
  series_cmd->add_flag("--expect-pole", expect_pole, "report a pole at the limit instead of failing");

  auto* relative_cmd = app.add_subcommand("relative", "absolute, normal bundle and relative series");
  add_common(relative_cmd, common);
  add_geometry(relative_cmd, geo);
  relative_cmd->add_option("--kind", kind)->check(CLI::IsMember({"T", "Seg", "L"}));
  relative_cmd->add_option("--order", order)->check(CLI::NonNegativeNumber);

  std::int64_t rub_a = 0, rub_d = 0, rub_mf = 1;
  auto* rubber_cmd = app.add_subcommand("rubber", "ratio of fiber lifts on Tot(O_P1(a))");
  add_common(rubber_cmd, common);
  rubber_cmd->add_option("-a,--a", rub_a);
  rubber_cmd->add_option("--d", rub_d, "M . C0");
  rubber_cmd->add_option("--mf", rub_mf, "fiber weight of the lift");
  rubber_cmd->add_option("--order", order)->check(CLI::NonNegativeNumber);

  std::vector<std::string> only;
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  verify_cmd->add_option("--only", only, "criteria ids, e.g. A1 A4")->delimiter(',');
  verify_cmd->add_option("--workers", common.workers)->check(CLI::PositiveNumber);

  int fit_n = 2;
  bool fit_relative = false, fit_monomial = false;
  auto* fit_cmd = app.add_subcommand("fit", "fit universal polynomials from toric samples");
  add_common(fit_cmd, common);
  fit_cmd->add_option("--kind", kind)->check(CLI::IsMember({"T", "Seg", "L"}));
  fit_cmd->add_option("--n", fit_n, "coefficient of q^n")->check(CLI::PositiveNumber);
  fit_cmd->add_flag("--relative", fit_relative, "fit the normal bundle series in C^2 and M.C");
  fit_cmd->add_flag("--monomial", fit_monomial, "fit coefficients directly as polynomials");

  std::string degrees = "0..4";
  auto* dt_cmd = app.add_subcommand("dt", "DT series of the degree d curve class");
  add_common(dt_cmd, common);
  dt_cmd->add_option("--degree", degrees, "d or lo..hi");
  dt_cmd->add_option("--order", order)->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (series_cmd->parsed()) {
      Geometry g = resolve(geo);
      AssignmentKind k = parse_kind(kind);
      IntegrateOptions o = integrate_options(common, expect_pole);
      if (expect_pole) {
        std::vector<BigRational> c{1};
        for (int n = 1; n <= order; ++n) {
          IntegrateResult r = integrate_detailed(k, g.surface, g.bundle, n, o);
          if (r.pole) {
            emit(common, "pole of order " + std::to_string(r.pole_order) + " at q^" + std::to_string(n) + "\n");
            return 0;
          }
          c.push_back(r.value);
        }
        emit(common, format_series({{"Z_" + kind, QSeries(order, c), "no pole"}}, parse_format(common.format)));
        return 0;
      }
      QSeries z = series(k, g.surface, g.bundle, order, o);
      emit(common, format_series({{"Z_" + kind, z, ""}}, parse_format(common.format)));
      return 0;
    }

    if (relative_cmd->parsed()) {
      Geometry g = resolve(geo);
      AssignmentKind k = parse_kind(kind);
      RelativeRun r = relative_pipeline(k, g, order, integrate_options(common));
      bool ok = true;
      std::vector<SeriesRow> rows{{"Z(S)", r.z_abs, ""}, {"Z(N)", r.z_normal, ""}, {"Z(S/C)", r.z_rel, ""}};
      if (k == AssignmentKind::T) {
        RuledData n{BigRational(0), BigRational(-r.inv.C2), BigRational(0), BigRational(r.inv.MC)};
        rows[0].note = compare_note(r.z_abs, xi_pow(delta(r.inv), order), "Xi^-" + to_string(delta(r.inv)), ok);
        rows[1].note = compare_note(r.z_normal, xi_pow(epsilon(n), order), "Xi^-" + to_string(epsilon(n)), ok);
        rows[2].note = compare_note(r.z_rel, r.closed_form, "Xi^-" + to_string(r.eta), ok);
      }
      emit(common, format_series(rows, parse_format(common.format)));
      if (!ok) std::cerr << "relative: identity failed\n";
      return ok ? 0 : 1;
    }

    if (rubber_cmd->parsed()) {
      RubberRun r = rubber_pipeline(rub_a, rub_d, rub_mf, order, integrate_options(common));
      bool ok = true;
      std::vector<SeriesRow> rows{{"Z(mf=" + std::to_string(rub_mf) + ")", r.z_inf, ""},
                                  {"Z(mf=0)", r.z_zero, ""},
                                  {"ratio", r.ratio, ""}};
      rows[2].note = compare_note(r.ratio, r.closed_form, "Xi^-" + to_string(r.eps_tilde), ok);
      emit(common, format_series(rows, parse_format(common.format)));
      if (!ok) std::cerr << "rubber: identity failed\n";
      return ok ? 0 : 1;
    }

    if (verify_cmd->parsed()) {
      std::vector<std::string> ids = only.empty() ? acceptance_ids() : only;
      int passed = 0;
      for (const auto& id : ids) {
        CriterionResult r = run_criterion(id, {common.workers});
        std::cout << format_result(r) << "\n" << std::flush;
        passed += r.pass;
      }
      std::cout << passed << "/" << ids.size() << " criteria passed\n";
      return passed == static_cast<int>(ids.size()) ? 0 : 1;
    }

    if (fit_cmd->parsed()) {
      AssignmentKind k = parse_kind(kind);
      IntegrateOptions o = integrate_options(common);
      FitResult f;
      if (fit_relative)
        f = fit_relative_normal(fit_n, relative_family(k, fit_n, o));
      else if (fit_monomial)
        f = fit_absolute_monomial(fit_n, absolute_family(k, fit_n, o));
      else
        f = fit_absolute(fit_n, absolute_family(k, fit_n, o));
      std::string label = kind + " q^" + std::to_string(fit_n);
      emit(common, format_polys({{label, f.poly}}, parse_format(common.format)));
      std::cerr << "rank " << f.rank << " of " << f.unknowns << " unknowns, " << f.samples << " samples\n";
      return 0;
    }

    if (dt_cmd->parsed()) {
      auto [lo, hi] = parse_range(degrees);
      std::vector<SeriesRow> rows;
      for (std::int64_t d = lo; d <= hi; ++d)
        rows.push_back({"d=" + std::to_string(d), dt_series(d, order), "Xi^-" + to_string(dt_exponent(d))});
      emit(common, format_series(rows, parse_format(common.format)));
      return 0;
    }
  } catch (const HilbError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
