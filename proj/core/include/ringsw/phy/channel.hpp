#pragma once

#include "ringsw/control/plan.hpp"
#include "ringsw/phy/field.hpp"
#include "ringsw/rng.hpp"

namespace ringsw::phy {

struct FiberSpec {
  double length_km = 50.0;
  double dispersion_ps_nm_km = 17.0;
  double attenuation_db_km = 0.2;
  double group_index = 1.468;
};

// Linear fiber model: all-pass chromatic-dispersion filter
// H(f) = exp(+j pi D lambda^2 L f^2 / c) plus scalar attenuation.
OpticalField propagate_fiber(const OpticalField& in, const FiberSpec& fiber);

// Scalar gain to the target mean power plus circular-Gaussian ASE with
// PSD = (G-1) * (NF/2) * h*nu per mode (single polarization).
OpticalField amplify(const OpticalField& in, double target_power_dbm, double nf_db, Rng& rng);

// White receiver-side noise floor with the given PSD.
OpticalField add_noise_floor(const OpticalField& in, double psd_dbm_per_ghz, Rng& rng);

// Frequency-domain multiplication by the whole-device port response implied by
// the plan. Throws std::invalid_argument when the port is not selected.
OpticalField apply_switch(const OpticalField& in, const device::DeviceSpec& spec,
                          const control::SwitchPlan& plan, int port,
                          device::Direction direction);

struct BasebandStream {
  cvec samples;
  double rate_ghz = 0.0;
};

// Ideal I/Q down-conversion with LO phase noise and a configurable frequency
// offset, anti-alias filtering and resampling to the ADC rate. Throws
// std::domain_error when the LO falls outside the field band.
BasebandStream coherent_receive(const OpticalField& in, double lo_freq_ghz,
                                double lo_linewidth_khz, double freq_offset_ghz,
                                double adc_rate_ghz, Rng& rng);

}  // namespace ringsw::phy
