#include "core/criteria.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace vesselmc {

std::string_view criterion_name(Criterion c) {
  switch (c) {
    case Criterion::Faupel: return "faupel";
    case Criterion::Svensson: return "svensson";
    case Criterion::Christopher: return "christopher";
    case Criterion::ZhengModifiedFaupel: return "zheng";
    case Criterion::BrabinModifiedFaupel: return "brabin";
  }
  return "?";
}

std::optional<Criterion> criterion_from_name(std::string_view name) {
  for (Criterion c : kAllCriteria) {
    if (criterion_name(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view invalid_reason_name(InvalidReason r) {
  switch (r) {
    case InvalidReason::NonPositiveWall: return "non_positive_wall";
    case InvalidReason::NonPositiveGeometry: return "non_positive_geometry";
    case InvalidReason::InvalidMaterial: return "invalid_material";
  }
  return "?";
}

double strain_hardening_exponent(double s_y, double s_u) {
  if (!(s_y > 0.0)) {
    throw DomainError("strain_hardening_exponent: s_y must be > 0");
  }
  if (!(s_u >= s_y)) {
    throw DomainError("strain_hardening_exponent: s_u must be >= s_y");
  }
  return 0.224 * std::pow(s_u / s_y - 1.0, 0.604);
}

namespace {

constexpr double kTwoOverSqrt3 = 1.1547005383792515;  // 2/sqrt(3)

// (e/r)^r, with the r -> 0 limit of 1 taken at r == 0 so the Svensson
// criterion is continuous across s_u == s_y.
double e_over_r_pow_r(double r) {
  return r > 0.0 ? std::pow(std::exp(1.0) / r, r) : 1.0;
}

}  // namespace

BurstResult burst_pressure(Criterion c, const DesignSample& s) {
  // Comparisons are written so NaN fields also land in an invalid marker.
  if (!(s.d_i > 0.0)) {
    return BurstResult::invalid(InvalidReason::NonPositiveGeometry);
  }
  const bool wall_open = s.d_o > s.d_i;  // log-family admissibility
  if (c != Criterion::Christopher && !wall_open) {
    return BurstResult::invalid(InvalidReason::NonPositiveWall);
  }
  if (c == Criterion::Christopher && !(s.d_o >= s.d_i)) {
    return BurstResult::invalid(InvalidReason::NonPositiveWall);
  }
  if (!(s.s_y > 0.0) || !(s.s_u >= s.s_y)) {
    return BurstResult::invalid(InvalidReason::InvalidMaterial);
  }

  const double ratio = s.s_y / s.s_u;  // in (0, 1]
  switch (c) {
    case Criterion::Faupel: {
      // P_b = 2/sqrt(3) * s_y * (2 - s_y/s_u) * ln(d_o/d_i)
      const double v =
          kTwoOverSqrt3 * s.s_y * (2.0 - ratio) * std::log(s.d_o / s.d_i);
      return BurstResult::valid(v);
    }
    case Criterion::Svensson: {
      // P_b = s_u * (0.25/(r + 0.227)) * (e/r)^r * ln(d_o/d_i)
      const double r = strain_hardening_exponent(s.s_y, s.s_u);
      const double v = s.s_u * (0.25 / (r + 0.227)) * e_over_r_pow_r(r) *
                       std::log(s.d_o / s.d_i);
      return BurstResult::valid(v);
    }
    case Criterion::Christopher: {
      // P_b = 2/(sqrt(3))^(r+1) * s_u * (d_o - d_i)/d_i
      const double r = strain_hardening_exponent(s.s_y, s.s_u);
      const double v = 2.0 / std::pow(std::sqrt(3.0), r + 1.0) * s.s_u *
                       (s.d_o - s.d_i) / s.d_i;
      return BurstResult::valid(v);
    }
    case Criterion::ZhengModifiedFaupel: {
      // P_b = 13.21 * s_y * (s_y/s_u)^4 * ln(d_o/d_i)
      const double ratio2 = ratio * ratio;
      const double v =
          13.21 * s.s_y * ratio2 * ratio2 * std::log(s.d_o / s.d_i);
      return BurstResult::valid(v);
    }
    case Criterion::BrabinModifiedFaupel: {
      // P_b = 2/sqrt(3) * s_y * {1 + 0.65 (1 - s_y/s_u)} * ln(d_o/d_i)
      const double v = kTwoOverSqrt3 * s.s_y * (1.0 + 0.65 * (1.0 - ratio)) *
                       std::log(s.d_o / s.d_i);
      return BurstResult::valid(v);
    }
  }
  throw DomainError("burst_pressure: unknown criterion");
}

BurstResult burst_at_means(Criterion c, const VesselModel& model) {
  return burst_pressure(c, model.means());
}

}  // namespace vesselmc
