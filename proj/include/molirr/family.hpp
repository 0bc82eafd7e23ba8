#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace molirr {

enum class Family {
  Tuc4c8s,
  Tuc4c8r,
  Tuc4,
  Tuhc6,
  Tuvc6,
  Dendrimer,
  Circumcoronene,
  MycielskiCycle,
  MycielskiPath,
};

inline constexpr Family kAllFamilies[] = {
    Family::Tuc4c8s,   Family::Tuc4c8r,        Family::Tuc4,
    Family::Tuhc6,     Family::Tuvc6,          Family::Dendrimer,
    Family::Circumcoronene, Family::MycielskiCycle, Family::MycielskiPath,
};

enum class Param { P, Q, K, D, N };

/// CLI token: tuc4c8s, tuc4c8r, tuc4, tuhc6, tuvc6, dendrimer,
/// circumcoronene, mcycle, mpath.
std::string_view family_token(Family f) noexcept;
std::optional<Family> parse_family(std::string_view token) noexcept;

char param_name(Param p) noexcept;

bool is_tube(Family f) noexcept;
bool uses_param(Family f, Param p) noexcept;

/// Smallest admissible value of a parameter; see validate().
std::int64_t param_floor(Family f, Param p) noexcept;

/// A family plus its integer parameters. Only the parameters the family
/// uses are meaningful: (p, q) for tubes, (k, d) for dendrimers, k for
/// circumcoronene and n for the Mycielski families. The rest stay 0.
struct FamilySpec {
  Family family = Family::Tuc4c8s;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t k = 0;
  std::int64_t d = 0;
  std::int64_t n = 0;

  std::int64_t get(Param which) const noexcept;
  void set(Param which, std::int64_t value) noexcept;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

FamilySpec tube(Family f, std::int64_t p, std::int64_t q);
FamilySpec dendrimer(std::int64_t k, std::int64_t d);
FamilySpec circumcoronene(std::int64_t k);
FamilySpec mycielski_cycle(std::int64_t n);
FamilySpec mycielski_path(std::int64_t n);

/// Throws Error(InvalidParams) when a used parameter is below its floor, an
/// unused one is set, or the instance would be too large to index.
///
/// Floors: TUC4C8S/R p,q >= 2; TUC4 p,q >= 3; TUHC6 p,q >= 2;
/// TUVC6 p >= 2, q >= 3; dendrimer k >= 3, d >= 1; circumcoronene k >= 1;
/// Mycielski n >= 4.
void validate(const FamilySpec& spec);

/// "p=4;q=4" style parameter echo (no commas, so it is CSV-safe).
std::string params_string(const FamilySpec& spec);

/// "tuc4c8s[p=4,q=4]".
std::string label(const FamilySpec& spec);

}  // namespace molirr
