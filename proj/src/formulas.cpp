#include "molirr/formulas.hpp"

#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "molirr/error.hpp"

namespace molirr {

namespace {

using Wide = __int128;

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Exact num/den reduced into 64-bit terms.
Rational ratio(Wide num, Wide den) {
  if (den == 0) throw Error(ErrorKind::InternalConsistency, "closed form divides by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr Wide kLimit = std::numeric_limits<std::int64_t>::max();
  if (wide_abs(num) > kLimit || den > kLimit) {
    throw Error(ErrorKind::InvalidParams, "closed form does not fit in 64-bit rationals");
  }
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

Rational whole(Wide v) { return ratio(v, 1); }

Wide wpow(Wide base, std::int64_t exp) {
  Wide r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::int64_t as_integer(const Rational& r) {
  if (r.denominator() != 1) {
    throw Error(ErrorKind::InternalConsistency, "closed form expected an integer");
  }
  return r.numerator();
}

const std::string kValidity[] = {
    "tuc4c8s: p >= 2, q >= 2",
    "tuc4c8r: p >= 2, q >= 2",
    "tuc4: p >= 3, q >= 3",
    "tuhc6: p >= 2, q >= 2",
    "tuvc6: p >= 2, q >= 3",
    "dendrimer: k >= 3, d >= 1",
    "circumcoronene: k >= 1",
    "mcycle: n >= 4",
    "mpath: n >= 4",
};

}  // namespace

const std::vector<ErrataEntry>& errata_ledger() {
  static const std::vector<ErrataEntry> ledger{
      {Family::Tuc4c8s, "mean_degree", "CS = lambda1 - 3 - 1/q (mean degree 3 + 1/q)",
       "CS = lambda1 - 3 + 1/q (mean degree 3 - 1/q)",
       "2m/n = 2*2p(3q-1)/(4pq) = 3 - 1/q; e.g. 2.75 on tuc4c8s[4,4]"},
      {Family::Tuc4c8s, "irr_t", "8 p^2 (q-1)", "16 p^2 (q-1)",
       "|V1| |V2| = 4p * 4p(q-1); the proof halves the product a second time; "
       "e.g. 384 printed, 768 by brute force on tuc4c8s[4,4]"},
      {Family::Tuc4c8r, "mean_degree", "CS = lambda1 - 3 - 1/(2q) (mean degree 3 + 1/(2q))",
       "CS = lambda1 - 3 + 1/(2q) (mean degree 3 - 1/(2q))",
       "2m/n = 2p(6q-1)/(4pq) = 3 - 1/(2q); e.g. 2.875 on tuc4c8r[4,4]"},
      {Family::Tuc4c8r, "irr_t", "2 p^2 (2q-1)", "4 p^2 (2q-1)",
       "|V1| |V2| = 2p * 2p(2q-1); the proof halves the product a second time"},
      {Family::Tuc4, "irr_t", "q^2 (p-2)", "2 q^2 (p-2)",
       "|V1| |V2| = 2q * (p-2)q; the proof halves the product a second time"},
      {Family::Tuvc6, "irr_t", "4 p^2 (q-2)", "8 p^2 (q-2)",
       "|V1| |V2| = 4p * 2p(q-2); the proof halves the product a second time; "
       "e.g. 448 printed, 896 by brute force on tuvc6[4,9]"},
      {Family::Dendrimer, "irr_t", "k^2 (k-1)^d ((k-1)^(d-1) - 2) / (2(k-2))",
       "k (k-1)^d (k (k-1)^(d-1) - 2) / (k-2)",
       "leaves times internal vertices times (k-1); printed form gives -9 and 0 on T(3,1) "
       "and T(3,2) where brute force gives 6 and 48"},
  };
  return ledger;
}

ClosedValues FormulaReport::corrected() const {
  return {Rational(irr), Rational(irr_t), variance, mean_degree};
}

FormulaReport closed_form(const FamilySpec& spec) {
  validate(spec);
  const Wide p = spec.p, q = spec.q, k = spec.k, n = spec.n;
  ClosedValues c;  // corrected
  switch (spec.family) {
    case Family::Tuc4c8s:
      c = {whole(4 * p), whole(16 * p * p * (q - 1)), ratio(q - 1, q * q), ratio(3 * q - 1, q)};
      break;
    case Family::Tuc4c8r:
      c = {whole(4 * p), whole(4 * p * p * (2 * q - 1)), ratio(2 * q - 1, 4 * q * q),
           ratio(6 * q - 1, 2 * q)};
      break;
    case Family::Tuc4:
      c = {whole(2 * q), whole(2 * q * q * (p - 2)), ratio(2 * (p - 2), p * p), ratio(4 * p - 2, p)};
      break;
    case Family::Tuhc6:
      c = {whole(4 * p), whole(4 * p * p * (q - 1)), ratio(q - 1, q * q), ratio(3 * q - 1, q)};
      break;
    case Family::Tuvc6:
      c = {whole(4 * p), whole(8 * p * p * (q - 2)), ratio(2 * (q - 2), q * q),
           ratio(3 * q - 2, q)};
      break;
    case Family::Dendrimer: {
      const Wide pd = wpow(k - 1, spec.d);
      const Wide pd1 = wpow(k - 1, spec.d - 1);
      const Wide denom = k * pd - 2;
      c = {whole(k * pd), ratio(k * pd * (k * pd1 - 2), k - 2),
           ratio(k * (k - 2) * pd * (k * (pd - 2) + 2), denom * denom),
           ratio(2 * k * (pd - 1), denom)};
      break;
    }
    case Family::Circumcoronene:
      c = {whole(12 * (k - 1)), whole(36 * k * k * (k - 1)), ratio(k - 1, k * k),
           ratio(3 * k - 1, k)};
      break;
    case Family::MycielskiCycle:
      c = {whole(n * (n - 1)), whole(n * (3 * n - 7)),
           ratio(n * (2 * n * n - 13 * n + 25), (2 * n + 1) * (2 * n + 1)), ratio(8 * n, 2 * n + 1)};
      break;
    case Family::MycielskiPath:
      c = {whole(n * n - n + 6), whole((n - 2) * (3 * n + 7)),
           ratio((n - 2) * (2 * n * n - 9 * n + 35), (2 * n + 1) * (2 * n + 1)),
           ratio(2 * (4 * n - 3), 2 * n + 1)};
      break;
  }

  FormulaReport report;
  report.spec = spec;
  report.irr = as_integer(c.irr);
  report.irr_t = as_integer(c.irr_t);
  report.variance = c.variance;
  report.mean_degree = c.mean_degree;
  report.printed = c;
  report.validity = kValidity[static_cast<std::size_t>(spec.family)];

  for (const ErrataEntry& e : errata_ledger()) {
    if (e.family == spec.family) report.errata.push_back(e);
  }
  switch (spec.family) {
    case Family::Tuc4c8s:
      report.printed.mean_degree = ratio(3 * q + 1, q);
      report.printed.irr_t = whole(8 * p * p * (q - 1));
      break;
    case Family::Tuc4c8r:
      report.printed.mean_degree = ratio(6 * q + 1, 2 * q);
      report.printed.irr_t = whole(2 * p * p * (2 * q - 1));
      break;
    case Family::Tuc4:
      report.printed.irr_t = whole(q * q * (p - 2));
      break;
    case Family::Tuvc6:
      report.printed.irr_t = whole(4 * p * p * (q - 2));
      break;
    case Family::Dendrimer: {
      const Wide pd = wpow(k - 1, spec.d);
      const Wide pd1 = wpow(k - 1, spec.d - 1);
      report.printed.irr_t = ratio(k * k * pd * (pd1 - 2), 2 * (k - 2));
      break;
    }
    default:
      break;
  }
  return report;
}

std::string formula_csv_header() {
  return "family,params,irr,irr_t,var_num,var_den,var_float,mean_num,mean_den,errata";
}

std::string formula_csv_row(const FormulaReport& r) {
  std::string errata;
  for (const auto& e : r.errata) {
    if (!errata.empty()) errata += ';';
    errata += e.field;
  }
  return fmt::format("{},{},{},{},{},{},{:.17g},{},{},{}", family_token(r.spec.family),
                     params_string(r.spec), r.irr, r.irr_t, r.variance.numerator(),
                     r.variance.denominator(), to_double(r.variance), r.mean_degree.numerator(),
                     r.mean_degree.denominator(), errata);
}

}  // namespace molirr
