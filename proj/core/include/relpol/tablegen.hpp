#pragma once

#include <string>
#include <vector>

#include "relpol/atom.hpp"
#include "relpol/polarizability.hpp"

namespace relpol::tablegen {

struct ConstantSet {
  double alpha_inv = kCodata2014AlphaInv;
  double alpha_inv_sigma = kCodata2014AlphaInvSigma;
};

struct TableRow {
  int Z = 0;
  double scaled_Z4 = 0.0;       ///< Z^4 alpha_1, a0^3
  double polarizability = 0.0;  ///< alpha_1, a0^3
  double sigma = 0.0;           ///< one-sigma uncertainty of scaled_Z4
  int sigma_last_two = 0;       ///< uncertainty in units of the last displayed digit
  int decimals = 0;             ///< decimal places shown
  std::string display;          ///< e.g. 0.164031922357129(14)
};

/// sigma(Z^4 alpha_1) from the uncertainty of alpha^-1, by a central
/// difference with step 1e4 * alpha_inv_sigma. Throws PropagationError when
/// the second difference exceeds 1% of the first.
double propagate_uncertainty(double Z, const ConstantSet& consts,
                             double tol = kDefaultTolerance);

struct DisplayPrecision {
  int decimals;
  int sigma_last_two;
};

/// Decimal places that leave exactly two uncertain digits.
DisplayPrecision display_precision(double value, double sigma);

/// value rounded half-to-even at the given number of decimal places.
std::string round_half_even(double value, int decimals);

/// Shortest decimal string that parses back to the same double.
std::string shortest_decimal(double value);

TableRow make_row(int Z, const ConstantSet& consts, double tol = kDefaultTolerance);

/// Rows for every integer Z in [z_min, z_max], evaluated on `threads`
/// workers (0 = hardware concurrency). Output is in Z order and independent
/// of the thread count; the first failing row (by Z) is rethrown.
std::vector<TableRow> generate_table(int z_min, int z_max, const ConstantSet& consts = {},
                                     double tol = kDefaultTolerance, unsigned threads = 0);

inline constexpr const char* kCsvHeader =
    "Z,scaled_polarizability_a0^3,uncertainty_last_two_digits,polarizability_a0^3";

std::string to_csv(const std::vector<TableRow>& rows);
std::string to_json(const std::vector<TableRow>& rows);

}  // namespace relpol::tablegen
