#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "relpol/errors.hpp"
#include "relpol/polarizability.hpp"
#include "relpol/sturmian.hpp"
#include "relpol/tablegen.hpp"

namespace relpol::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  double Z = 0.0;
  int z_min = 1;
  int z_max = 68;
  double alpha_inv = kCodata2014AlphaInv;
  double alpha_inv_sigma = kCodata2014AlphaInvSigma;
  std::optional<double> tol;
  std::string format = "text";
  std::string output;
  unsigned threads = 0;
};

std::string g15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

json diagnostics_json(const std::optional<specfun::SeriesDiagnostics>& d) {
  if (!d) return nullptr;
  json j;
  j["terms_used"] = d->terms_used;
  j["tail_estimate"] = d->tail_estimate;
  j["converged"] = d->converged;
  return j;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                    const char* command) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw DomainError(std::string("--format ") + format + " is not available for " + command);
}

std::string single_value(Dimension dim, const Options& o) {
  require_format(o.format, {"text", "json"}, to_string(dim));
  const AtomSpec spec(o.Z, dim, o.alpha_inv);
  const double tol = o.tol.value_or(kDefaultTolerance);
  const auto result = dim == Dimension::planar ? polarizability_planar(spec, tol)
                                               : polarizability_spatial(spec, tol);
  if (o.format == "json") {
    json j;
    j["dimension"] = to_string(dim);
    j["Z"] = o.Z;
    j["alpha_inv"] = o.alpha_inv;
    j["tol"] = tol;
    j["method"] = to_string(result.method);
    j["alpha_1_a0^3"] = result.value_a0_cubed;
    j["Z^4*alpha_1_a0^3"] = result.scaled_Z4;
    j["nonrel_Z^4*alpha_1_a0^3"] = nonrel_limit(dim);
    j["diagnostics"] = diagnostics_json(result.diagnostics);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "dimension = " << to_string(dim) << "\n"
     << "Z = " << g15(o.Z) << "\n"
     << "alpha_inv = " << g15(o.alpha_inv) << "\n"
     << "alpha_1 = " << g15(result.value_a0_cubed) << " a0^3\n"
     << "Z^4*alpha_1 = " << g15(result.scaled_Z4) << " a0^3\n"
     << "nonrel Z^4*alpha_1 = " << g15(nonrel_limit(dim)) << " a0^3\n";
  if (result.diagnostics) {
    os << "3F2 terms = " << result.diagnostics->terms_used << "\n"
       << "3F2 tail estimate = " << result.diagnostics->tail_estimate << "\n";
  }
  return os.str();
}

std::string table(const Options& o) {
  require_format(o.format, {"text", "csv", "json"}, "table");
  const tablegen::ConstantSet consts{o.alpha_inv, o.alpha_inv_sigma};
  const auto rows = tablegen::generate_table(o.z_min, o.z_max, consts,
                                             o.tol.value_or(kDefaultTolerance), o.threads);
  if (o.format == "csv") return tablegen::to_csv(rows);
  if (o.format == "json") return tablegen::to_json(rows);
  std::ostringstream os;
  os << "Z   Z^4*alpha_1 [a0^3]\n";
  for (const auto& r : rows) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%-3d %s\n", r.Z, r.display.c_str());
    os << buf;
  }
  return os.str();
}

double rel_dev(double a, double b) {
  return b == 0.0 ? std::fabs(a) : std::fabs(a - b) / std::fabs(b);
}

std::string crosscheck(const Options& o) {
  require_format(o.format, {"text", "json"}, "crosscheck");
  const AtomSpec spec(o.Z, Dimension::planar, o.alpha_inv);
  const double series_tol = o.tol.value_or(1e-12);

  json channels = json::array();
  double worst_series = 0.0;
  double worst_quadrature = 0.0;
  for (int twice_kappa : {1, -3}) {
    const auto ch = ChannelIndex::planar(twice_kappa);
    const double closed = r_channel_closed(ch, spec);
    const auto series = sturmian::r_channel_series(ch, spec, series_tol);
    const double dev = rel_dev(series.value, closed);
    worst_series = std::max(worst_series, dev);

    // first-order integrals, measured against the largest one of the channel
    double scale = 0.0;
    double worst = 0.0;
    std::vector<std::pair<sturmian::RadialIntegralPair, sturmian::RadialIntegralPair>> pairs;
    for (int n = -3; n <= 3; ++n) {
      const auto idx = sturmian::SturmianIndex::make(n, ch);
      pairs.emplace_back(sturmian::first_order_integral(idx, spec),
                         sturmian::first_order_integral_quadrature(idx, spec));
      scale = std::max({scale, std::fabs(pairs.back().first.plain),
                        std::fabs(pairs.back().first.mu_weighted)});
    }
    for (const auto& [c, q] : pairs) {
      worst = std::max({worst, std::fabs(c.plain - q.plain) / scale,
                        std::fabs(c.mu_weighted - q.mu_weighted) / scale});
    }
    worst_quadrature = std::max(worst_quadrature, worst);

    json j;
    j["twice_kappa"] = twice_kappa;
    j["R_closed"] = closed;
    j["R_series"] = series.value;
    j["series_terms"] = series.diagnostics.terms_used;
    j["relative_deviation"] = dev;
    j["integrals_quadrature_deviation"] = worst;
    channels.push_back(j);
  }
  const auto closed = polarizability_planar(spec);
  const auto series = polarizability_sturmian(spec, series_tol);
  const double alpha_dev = rel_dev(series.value_a0_cubed, closed.value_a0_cubed);
  worst_series = std::max(worst_series, alpha_dev);

  if (o.format == "json") {
    json j;
    j["Z"] = o.Z;
    j["alpha_inv"] = o.alpha_inv;
    j["tol"] = series_tol;
    j["channels"] = channels;
    j["alpha_1_closed"] = closed.value_a0_cubed;
    j["alpha_1_series"] = series.value_a0_cubed;
    j["max_relative_deviation"] = worst_series;
    j["max_quadrature_deviation"] = worst_quadrature;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os.precision(17);
  os << "Z = " << g15(o.Z) << "\n";
  for (const auto& c : channels) {
    os << "kappa = " << c["twice_kappa"].get<int>() << "/2\n"
       << "  R closed form     = " << c["R_closed"].get<double>() << "\n"
       << "  R Sturmian series = " << c["R_series"].get<double>() << " ("
       << c["series_terms"].get<std::size_t>() << " terms)\n";
    os.precision(3);
    os << "  relative deviation = " << c["relative_deviation"].get<double>() << "\n"
       << "  first-order integrals vs quadrature, |n_r| <= 3 = "
       << c["integrals_quadrature_deviation"].get<double>() << "\n";
    os.precision(17);
  }
  os << "alpha_1 closed form     = " << closed.value_a0_cubed << " a0^3\n"
     << "alpha_1 Sturmian series = " << series.value_a0_cubed << " a0^3\n";
  os.precision(3);
  os << "max relative deviation = " << worst_series << "\n"
     << "max quadrature deviation = " << worst_quadrature << "\n";
  return os.str();
}

std::string limits(const Options& o) {
  require_format(o.format, {"text", "json"}, "limits");
  const double tol = o.tol.value_or(kDefaultTolerance);
  const double planar = quasirel_coefficient(Dimension::planar, o.alpha_inv, 4, tol);
  const double spatial = quasirel_coefficient(Dimension::spatial, o.alpha_inv, 4, tol);
  if (o.format == "json") {
    json j;
    j["alpha_inv"] = o.alpha_inv;
    j["planar"] = {{"nonrel_Z^4*alpha_1", nonrel_limit(Dimension::planar)},
                   {"quasirel_coefficient", planar},
                   {"quasirel_target", -3.5}};
    j["spatial"] = {{"nonrel_Z^4*alpha_1", nonrel_limit(Dimension::spatial)},
                    {"quasirel_coefficient", spatial},
                    {"quasirel_target", -28.0 / 27.0}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "planar  nonrel Z^4*alpha_1 = " << g15(nonrel_limit(Dimension::planar))
     << " a0^3 (21/128)\n"
     << "spatial nonrel Z^4*alpha_1 = " << g15(nonrel_limit(Dimension::spatial))
     << " a0^3 (9/2)\n"
     << "planar  quasi-relativistic coefficient = " << g15(planar) << " (target -7/2)\n"
     << "spatial quasi-relativistic coefficient = " << g15(spatial) << " (target -28/27 = "
     << g15(-28.0 / 27.0) << ")\n";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Static dipole polarizability of Dirac hydrogen-like atoms", "relpol"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--alpha-inv", o.alpha_inv, "inverse fine-structure constant")
        ->envname("RELPOL_ALPHA_INV")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol", o.tol, "relative tolerance");
    sub->add_option("--format", o.format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--output,-o", o.output, "write the document here instead of stdout");
  };

  auto* planar = app.add_subcommand("planar", "polarizability of the planar atom");
  planar->add_option("--Z", o.Z, "nuclear charge")->required();
  add_common(planar);

  auto* spatial = app.add_subcommand("spatial", "polarizability of the three-dimensional atom");
  spatial->add_option("--Z", o.Z, "nuclear charge")->required();
  add_common(spatial);

  auto* tab = app.add_subcommand("table", "scaled polarizabilities with uncertainties");
  tab->add_option("--z-min", o.z_min, "first Z")->capture_default_str();
  tab->add_option("--z-max", o.z_max, "last Z")->capture_default_str();
  tab->add_option("--alpha-inv-sigma", o.alpha_inv_sigma, "one-sigma uncertainty of alpha_inv")
      ->check(CLI::NonNegativeNumber);
  tab->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  add_common(tab);

  auto* cross = app.add_subcommand("crosscheck", "closed forms against series and quadrature");
  cross->add_option("--Z", o.Z, "nuclear charge")->required();
  add_common(cross);

  auto* lim = app.add_subcommand("limits", "nonrelativistic and quasi-relativistic limits");
  add_common(lim);

  std::vector<std::string> argv_store{"relpol"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kArgumentError;
  }

  try {
    std::string doc;
    if (*planar) doc = single_value(Dimension::planar, o);
    if (*spatial) doc = single_value(Dimension::spatial, o);
    if (*tab) doc = table(o);
    if (*cross) doc = crosscheck(o);
    if (*lim) doc = limits(o);

    if (o.output.empty()) {
      out << doc;
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!file) throw DomainError("cannot open output file " + o.output);
      file << doc;
    }
    return kOk;
  } catch (const SupercriticalError& e) {
    err << "error: " << e.what() << "\n";
    return kSupercritical;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kConvergenceFailure;
  } catch (const PropagationError& e) {
    err << "error: " << e.what() << "\n";
    return kConvergenceFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kArgumentError;
  }
}

}  // namespace relpol::cli
