#include "molirr/family.hpp"

#include <algorithm>
#include <array>

#include <fmt/format.h>

#include "molirr/error.hpp"

namespace molirr {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view token;
  std::array<std::int64_t, 5> floors;  // indexed by Param; 0 = unused
};

// p, q, k, d, n
constexpr std::array<FamilyInfo, 9> kFamilies{{
    {Family::Tuc4c8s, "tuc4c8s", {2, 2, 0, 0, 0}},
    {Family::Tuc4c8r, "tuc4c8r", {2, 2, 0, 0, 0}},
    {Family::Tuc4, "tuc4", {3, 3, 0, 0, 0}},
    {Family::Tuhc6, "tuhc6", {2, 2, 0, 0, 0}},
    {Family::Tuvc6, "tuvc6", {2, 3, 0, 0, 0}},
    {Family::Dendrimer, "dendrimer", {0, 0, 3, 1, 0}},
    {Family::Circumcoronene, "circumcoronene", {0, 0, 1, 0, 0}},
    {Family::MycielskiCycle, "mcycle", {0, 0, 0, 0, 4}},
    {Family::MycielskiPath, "mpath", {0, 0, 0, 0, 4}},
}};

const FamilyInfo& info(Family f) noexcept {
  for (const auto& i : kFamilies) {
    if (i.family == f) return i;
  }
  return kFamilies[0];
}

constexpr std::array<Param, 5> kParams{Param::P, Param::Q, Param::K, Param::D, Param::N};

// Largest graph any generator is asked to build, and largest single
// parameter (keeps every closed form inside 128-bit intermediates).
constexpr __int128 kMaxVertices = 50'000'000;
constexpr std::int64_t kMaxParam = 1'000'000;

__int128 order_of(const FamilySpec& s) {
  switch (s.family) {
    case Family::Tuc4c8s:
    case Family::Tuc4c8r:
      return __int128{4} * s.p * s.q;
    case Family::Tuc4:
      return __int128{s.p} * s.q;
    case Family::Tuhc6:
    case Family::Tuvc6:
      return __int128{2} * s.p * s.q;
    case Family::Dendrimer: {
      __int128 power = 1;
      for (std::int64_t i = 0; i < s.d; ++i) {
        power *= s.k - 1;
        if (power > kMaxVertices) return kMaxVertices + 1;
      }
      return (s.k * power - 2) / (s.k - 2);
    }
    case Family::Circumcoronene:
      return __int128{6} * s.k * s.k;
    case Family::MycielskiCycle:
    case Family::MycielskiPath:
      return __int128{2} * s.n + 1;
  }
  return 0;
}

}  // namespace

std::string_view family_token(Family f) noexcept { return info(f).token; }

std::optional<Family> parse_family(std::string_view token) noexcept {
  for (const auto& i : kFamilies) {
    if (i.token == token) return i.family;
  }
  return std::nullopt;
}

char param_name(Param p) noexcept { return "pqkdn"[static_cast<int>(p)]; }

bool is_tube(Family f) noexcept {
  return f == Family::Tuc4c8s || f == Family::Tuc4c8r || f == Family::Tuc4 ||
         f == Family::Tuhc6 || f == Family::Tuvc6;
}

bool uses_param(Family f, Param p) noexcept { return param_floor(f, p) > 0; }

std::int64_t param_floor(Family f, Param p) noexcept {
  return info(f).floors[static_cast<std::size_t>(p)];
}

std::int64_t FamilySpec::get(Param which) const noexcept {
  switch (which) {
    case Param::P: return p;
    case Param::Q: return q;
    case Param::K: return k;
    case Param::D: return d;
    case Param::N: return n;
  }
  return 0;
}

void FamilySpec::set(Param which, std::int64_t value) noexcept {
  switch (which) {
    case Param::P: p = value; break;
    case Param::Q: q = value; break;
    case Param::K: k = value; break;
    case Param::D: d = value; break;
    case Param::N: n = value; break;
  }
}

FamilySpec tube(Family f, std::int64_t p, std::int64_t q) { return {.family = f, .p = p, .q = q}; }
FamilySpec dendrimer(std::int64_t k, std::int64_t d) {
  return {.family = Family::Dendrimer, .k = k, .d = d};
}
FamilySpec circumcoronene(std::int64_t k) { return {.family = Family::Circumcoronene, .k = k}; }
FamilySpec mycielski_cycle(std::int64_t n) { return {.family = Family::MycielskiCycle, .n = n}; }
FamilySpec mycielski_path(std::int64_t n) { return {.family = Family::MycielskiPath, .n = n}; }

void validate(const FamilySpec& spec) {
  for (Param p : kParams) {
    const auto floor = param_floor(spec.family, p);
    const auto value = spec.get(p);
    if (floor == 0) {
      if (value != 0) {
        throw Error(ErrorKind::InvalidParams,
                    fmt::format("{} takes no parameter {}", family_token(spec.family), param_name(p)));
      }
    } else if (value < floor) {
      throw Error(ErrorKind::InvalidParams,
                  fmt::format("{} needs {} >= {}, got {}", family_token(spec.family),
                              param_name(p), floor, value));
    } else if (value > kMaxParam) {
      throw Error(ErrorKind::InvalidParams,
                  fmt::format("{} = {} is too large", param_name(p), value));
    }
  }
  if (order_of(spec) > kMaxVertices) {
    throw Error(ErrorKind::InvalidParams,
                fmt::format("{} exceeds {} vertices", label(spec), static_cast<long long>(kMaxVertices)));
  }
}

std::string params_string(const FamilySpec& spec) {
  std::string out;
  for (Param p : kParams) {
    if (!uses_param(spec.family, p)) continue;
    if (!out.empty()) out += ';';
    out += fmt::format("{}={}", param_name(p), spec.get(p));
  }
  return out;
}

std::string label(const FamilySpec& spec) {
  std::string params = params_string(spec);
  std::replace(params.begin(), params.end(), ';', ',');
  return fmt::format("{}[{}]", family_token(spec.family), params);
}

}  // namespace molirr
