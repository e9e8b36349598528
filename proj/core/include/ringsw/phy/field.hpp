#pragma once

#include "ringsw/units.hpp"

namespace ringsw::phy {

// Complex baseband sample stream with an absolute power reference:
// unit mean-square amplitude corresponds to power_ref_dbm.
struct OpticalField {
  cvec samples;
  double sample_rate_ghz = 0.0;
  double center_freq_ghz = 0.0;  // absolute
  double power_ref_dbm = 0.0;

  double center_wavelength_nm() const { return units::wavelength_nm(center_freq_ghz); }

  double mean_square() const {
    double p = 0.0;
    for (const auto& v : samples) p += std::norm(v);
    return samples.empty() ? 0.0 : p / static_cast<double>(samples.size());
  }
  double power_dbm() const { return power_ref_dbm + units::lin_to_db(mean_square()); }

  // Pure scaling (VOA) to the requested mean power.
  void set_power_dbm(double target_dbm);
};

}  // namespace ringsw::phy
