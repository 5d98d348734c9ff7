#include "relpol/tablegen.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "relpol/errors.hpp"

namespace relpol::tablegen {

namespace {

double scaled_at(double Z, double alpha_inv, double tol) {
  return polarizability_planar(AtomSpec(Z, Dimension::planar, alpha_inv), tol).scaled_Z4;
}

}  // namespace

double propagate_uncertainty(double Z, const ConstantSet& consts, double tol) {
  if (!(consts.alpha_inv_sigma >= 0.0) || !std::isfinite(consts.alpha_inv_sigma)) {
    throw DomainError("alpha_inv_sigma must be a finite non-negative number");
  }
  if (consts.alpha_inv_sigma == 0.0) return 0.0;
  const double h = 1e4 * consts.alpha_inv_sigma;
  const double f0 = scaled_at(Z, consts.alpha_inv, tol);
  const double fp = scaled_at(Z, consts.alpha_inv + h, tol);
  const double fm = scaled_at(Z, consts.alpha_inv - h, tol);
  const double first = fp - fm;
  const double second = fp - 2.0 * f0 + fm;
  const double noise = 8.0 * std::numeric_limits<double>::epsilon() * std::fabs(f0);
  if (std::fabs(second) > 0.01 * std::fabs(first) + noise) {
    std::ostringstream os;
    os.precision(6);
    os << "uncertainty propagation at Z = " << Z << ": curvature " << std::fabs(second)
       << " exceeds 1% of the first difference " << std::fabs(first);
    throw PropagationError(os.str());
  }
  return std::fabs(first / (2.0 * h)) * consts.alpha_inv_sigma;
}

DisplayPrecision display_precision(double value, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    // nothing uncertain: fifteen significant digits
    const double mag = value == 0.0 ? 0.0 : std::floor(std::log10(std::fabs(value)));
    return {std::max(0, 14 - static_cast<int>(mag)), 0};
  }
  int decimals = static_cast<int>(std::floor(-std::log10(sigma))) + 2;
  auto digits = static_cast<int>(std::nearbyint(sigma * std::pow(10.0, decimals)));
  if (digits >= 100) {
    --decimals;
    digits = static_cast<int>(std::nearbyint(sigma * std::pow(10.0, decimals)));
  }
  return {decimals, digits};
}

std::string round_half_even(double value, int decimals) {
  if (!std::isfinite(value)) throw DomainError("round_half_even requires a finite value");
  if (decimals < 0 || decimals > 40) throw DomainError("decimals must lie in [0, 40]");
  // glibc prints the exact binary value; 1100 places cover any double
  std::vector<char> buf(1500);
  std::snprintf(buf.data(), buf.size(), "%.1100f", std::fabs(value));
  std::string exact(buf.data());
  const auto point = exact.find('.');
  std::string digits = exact.substr(0, point) + exact.substr(point + 1);
  const std::size_t keep = point + static_cast<std::size_t>(decimals);

  bool round_up = false;
  const char next = digits[keep];
  if (next > '5') {
    round_up = true;
  } else if (next == '5') {
    const bool rest_nonzero =
        digits.find_first_not_of('0', keep + 1) != std::string::npos;
    const char last = keep == 0 ? '0' : digits[keep - 1];
    round_up = rest_nonzero || ((last - '0') % 2 == 1);
  }
  digits.resize(keep);
  if (round_up) {
    int i = static_cast<int>(digits.size()) - 1;
    for (; i >= 0; --i) {
      if (digits[i] == '9') {
        digits[i] = '0';
      } else {
        ++digits[i];
        break;
      }
    }
    if (i < 0) digits.insert(digits.begin(), '1');
  }
  const std::size_t int_len = digits.size() - static_cast<std::size_t>(decimals);
  std::string out = digits.substr(0, int_len);
  if (out.empty()) out = "0";
  if (decimals > 0) out += "." + digits.substr(int_len);
  const bool is_zero = out.find_first_not_of("0.") == std::string::npos;
  if (std::signbit(value) && !is_zero) out.insert(out.begin(), '-');
  return out;
}

std::string shortest_decimal(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

TableRow make_row(int Z, const ConstantSet& consts, double tol) {
  const auto result = polarizability_planar(AtomSpec(Z, Dimension::planar, consts.alpha_inv), tol);
  TableRow row;
  row.Z = Z;
  row.scaled_Z4 = result.scaled_Z4;
  row.polarizability = result.value_a0_cubed;
  row.sigma = propagate_uncertainty(Z, consts, tol);
  const auto precision = display_precision(row.scaled_Z4, row.sigma);
  row.decimals = precision.decimals;
  row.sigma_last_two = precision.sigma_last_two;
  row.display = round_half_even(row.scaled_Z4, row.decimals);
  if (row.sigma > 0.0) {
    char tail[16];
    std::snprintf(tail, sizeof tail, "(%02d)", row.sigma_last_two);
    row.display += tail;
  }
  return row;
}

std::vector<TableRow> generate_table(int z_min, int z_max, const ConstantSet& consts,
                                     double tol, unsigned threads) {
  if (z_min < 1 || z_max < z_min) {
    throw DomainError("table range must satisfy 1 <= z_min <= z_max");
  }
  const auto count = static_cast<std::size_t>(z_max - z_min + 1);
  std::vector<std::optional<TableRow>> rows(count);
  std::vector<std::exception_ptr> errors(count);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        rows[i] = make_row(z_min + static_cast<int>(i), consts, tol);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<TableRow> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*rows[i]));
  }
  return out;
}

std::string to_csv(const std::vector<TableRow>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += std::to_string(r.Z) + ',' + shortest_decimal(r.scaled_Z4) + ',' +
           std::to_string(r.sigma_last_two) + ',' + shortest_decimal(r.polarizability) + '\n';
  }
  return out;
}

std::string to_json(const std::vector<TableRow>& rows) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["Z"] = r.Z;
    o["scaled_polarizability_a0^3"] = shortest_decimal(r.scaled_Z4);
    o["polarizability_a0^3"] = shortest_decimal(r.polarizability);
    o["uncertainty_a0^3"] = shortest_decimal(r.sigma);
    o["uncertainty_last_two_digits"] = r.sigma_last_two;
    o["decimals"] = r.decimals;
    o["display"] = r.display;
    doc.push_back(std::move(o));
  }
  return doc.dump(2) + "\n";
}

}  // namespace relpol::tablegen
