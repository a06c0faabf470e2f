#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "core/model.hpp"

namespace vesselmc {

// The five published burst-pressure criteria for unflawed thin-walled
// cylindrical vessels.
enum class Criterion {
  Faupel,
  Svensson,
  Christopher,
  ZhengModifiedFaupel,
  BrabinModifiedFaupel,
};

inline constexpr std::array<Criterion, 5> kAllCriteria = {
    Criterion::Faupel, Criterion::Svensson, Criterion::Christopher,
    Criterion::ZhengModifiedFaupel, Criterion::BrabinModifiedFaupel,
};

// Canonical lowercase names for config files and CSV: faupel, svensson,
// christopher, zheng, brabin.
std::string_view criterion_name(Criterion c);
std::optional<Criterion> criterion_from_name(std::string_view name);

// Why a sample admits no burst pressure.
enum class InvalidReason {
  NonPositiveWall,      // d_o <= d_i (strict <= for log-family criteria)
  NonPositiveGeometry,  // d_i <= 0
  InvalidMaterial,      // s_y <= 0 or s_u < s_y
};

std::string_view invalid_reason_name(InvalidReason r);

// Burst pressure in Pa, or an invalid marker with a reason code.
// Invalidity is a value rather than an exception so the Monte Carlo loop
// can count it.
class BurstResult {
 public:
  static BurstResult valid(double value_pa) {
    return BurstResult(value_pa, std::nullopt);
  }
  static BurstResult invalid(InvalidReason reason) {
    return BurstResult(0.0, reason);
  }

  bool is_valid() const { return !reason_.has_value(); }
  double value_pa() const { return value_pa_; }
  InvalidReason reason() const { return *reason_; }

 private:
  BurstResult(double value_pa, std::optional<InvalidReason> reason)
      : value_pa_(value_pa), reason_(reason) {}

  double value_pa_;
  std::optional<InvalidReason> reason_;
};

// Strain-hardening exponent r = 0.224 * (s_u/s_y - 1)^0.604, used by the
// Svensson and Christopher criteria. Zero exactly when s_u == s_y.
// Throws DomainError when s_y <= 0 or s_u < s_y (negative base under a
// fractional power).
double strain_hardening_exponent(double s_y, double s_u);

// Evaluates criterion c on the sample. Admissible samples map to the
// criterion's value in Pa; the rest map to an invalid marker:
//   - d_i <= 0                      -> NonPositiveGeometry
//   - d_o <= d_i (d_o < d_i for
//     Christopher, whose wall term
//     is an exact zero at d_o==d_i) -> NonPositiveWall
//   - s_y <= 0 or s_u < s_y         -> InvalidMaterial
BurstResult burst_pressure(Criterion c, const DesignSample& s);

// burst_pressure at the model means.
BurstResult burst_at_means(Criterion c, const VesselModel& model);

}  // namespace vesselmc
