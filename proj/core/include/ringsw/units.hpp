#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace ringsw {

using cvec = std::vector<std::complex<double>>;

namespace units {

// Speed of light expressed in nm*GHz (c = 2.99792458e8 m/s).
inline constexpr double kC_nm_ghz = 2.99792458e8;
inline constexpr double kC_m_s = 2.99792458e8;
inline constexpr double kPlanck_Js = 6.62607015e-34;

inline double freq_ghz(double wavelength_nm) { return kC_nm_ghz / wavelength_nm; }
inline double wavelength_nm(double freq_ghz) { return kC_nm_ghz / freq_ghz; }

// First-order conversion of a wavelength span to a frequency span around a
// carrier: df = c * dl / l^2.
inline double span_ghz(double dlambda_nm, double carrier_nm) {
  return kC_nm_ghz * dlambda_nm / (carrier_nm * carrier_nm);
}
inline double span_nm(double df_ghz, double carrier_nm) {
  return df_ghz * carrier_nm * carrier_nm / kC_nm_ghz;
}

inline double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }
inline double lin_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
inline double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

inline double photon_energy_j(double wavelength_nm) {
  return kPlanck_Js * kC_m_s / (wavelength_nm * 1e-9);
}

}  // namespace units
}  // namespace ringsw
