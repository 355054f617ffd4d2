#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blochsim {

inline constexpr double kHbar = 1.054571817e-34;             // J s
inline constexpr double kAtomicMassUnit = 1.66053906892e-27;  // kg
inline constexpr double kRb87Mass = 86.909180531 * kAtomicMassUnit;

// Laser and atom constants. Everything downstream works in recoil units
// (energies in E_r, momenta in hbar*k, time in hbar/E_r); this struct is
// the single place where SI enters and leaves.
struct PhysicalConfig {
  double wavelength = 1064e-9;   // lattice laser wavelength, m
  double atom_mass = kRb87Mass;  // kg
  double gravity_g = 9.80665;    // reference acceleration g, m/s^2

  void validate() const {
    if (!(wavelength > 0.0) || !(atom_mass > 0.0) || !(gravity_g > 0.0)) {
      throw std::invalid_argument(
          "PhysicalConfig: wavelength, atom_mass, gravity_g must be positive");
    }
  }

  double wave_number() const { return 2.0 * std::numbers::pi / wavelength; }

  // E_r = (hbar k)^2 / 2m, in joules
  double recoil_energy() const {
    const double hk = kHbar * wave_number();
    return hk * hk / (2.0 * atom_mass);
  }

  // One unit of internal time, hbar / E_r, in seconds
  double recoil_time() const { return kHbar / recoil_energy(); }

  double seconds_to_recoil(double t_seconds) const {
    return t_seconds / recoil_time();
  }
  double recoil_to_seconds(double t_recoil) const {
    return t_recoil * recoil_time();
  }

  // Quasimomentum drift dq/dt in (hbar k)/s for an acceleration in units of g
  double drift_rate(double accel_g) const {
    return atom_mass * accel_g * gravity_g / (kHbar * wave_number());
  }

  // tau_b = 2 hbar k / F: time for q to sweep one full Brillouin zone, s
  double bloch_period(double accel_g) const {
    return 2.0 / std::abs(drift_rate(accel_g));
  }

  // 2 hbar k / m, the separation velocity of adjacent diffraction orders, m/s
  double two_photon_velocity() const {
    return 2.0 * kHbar * wave_number() / atom_mass;
  }
};

}  // namespace blochsim
