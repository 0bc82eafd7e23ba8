#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "molirr/family.hpp"
#include "molirr/rational.hpp"

namespace molirr {

/// A place where a printed theorem disagrees with its own proof arithmetic
/// or with brute force on the generated graph.
struct ErrataEntry {
  Family family;
  std::string field;
  std::string printed_form;
  std::string corrected_form;
  std::string justification;
};

/// The known discrepancies, in a fixed order.
const std::vector<ErrataEntry>& errata_ledger();

/// Closed-form measures of one instance.
struct ClosedValues {
  Rational irr;
  Rational irr_t;
  Rational variance;
  Rational mean_degree;
};

struct FormulaReport {
  FamilySpec spec;
  // Values that match the generated graphs (errata applied).
  std::int64_t irr = 0;
  std::int64_t irr_t = 0;
  Rational variance;
  Rational mean_degree;
  // The theorem as printed. Differs from the above only on errata fields;
  // the printed dendrimer irr_t can be negative or fractional.
  ClosedValues printed;
  std::string validity;
  std::vector<ErrataEntry> errata;

  ClosedValues corrected() const;
};

/// Throws InvalidParams for specs outside the generator floors.
FormulaReport closed_form(const FamilySpec& spec);

/// CSV: family,params,irr,irr_t,var_num,var_den,var_float,mean_num,mean_den,errata
std::string formula_csv_header();
std::string formula_csv_row(const FormulaReport& report);

}  // namespace molirr
