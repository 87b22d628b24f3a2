#pragma once

#include <cmath>

// Unit conversions between the user-facing configuration units (dBm, dB,
// km/h, BS per km^2) and the internal SI system (watts, linear ratios,
// m/s, BS per m^2). All engine code works exclusively in SI.

namespace udnho::units {

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

inline double kmh_to_mps(double kmh) { return kmh / 3.6; }

inline double mps_to_kmh(double mps) { return mps * 3.6; }

inline double per_km2_to_per_m2(double per_km2) { return per_km2 * 1e-6; }

inline double per_m2_to_per_km2(double per_m2) { return per_m2 * 1e6; }

// Rate conversions used for reporting only.
inline double per_m_to_per_km(double per_m) { return per_m * 1e3; }

inline double per_s_to_per_hour(double per_s) { return per_s * 3600.0; }

}  // namespace udnho::units
