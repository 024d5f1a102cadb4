// model.hpp — Physical parameter types, moment-grid indexing, and unit conversions.
//
// All frequencies and rates are angular (rad/s) internally. Interfaces that
// speak Hz/MHz/GHz or dBm live at the CLI boundary, not here.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace knr {

using Complex = std::complex<double>;

inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double two_pi = 6.283185307179586476925286766559;

// Thrown on malformed configs, bad CLI input, or invalid parameter sets.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a solver fails (singular system, non-convergence, ...).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a fitting run cannot produce a result.
struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Resonator and bath rates. The total linewidth kappa is derived, never stored.
struct SystemParams {
    double omega0 = 0.0;    // resonance frequency Omega_0 (rad/s)
    double kerr = 0.0;      // Kerr coefficient K (rad/s), sign-carrying
    double kappa_ex = 0.0;  // external coupling rate (rad/s)
    double kappa_in = 0.0;  // internal loss rate (rad/s)
    double gamma_p = 0.0;   // pure dephasing rate (rad/s)

    double kappa() const { return kappa_ex + kappa_in + 2.0 * gamma_p; }

    // kappa_ex > 0, kappa_in >= 0, gamma_p >= 0, omega0 > 0, all finite.
    void validate() const;
};

// Monochromatic drive. |amplitude|^2 is the injected photon rate (1/s);
// the phase of the amplitude is a free gauge, fixed to zero by convention
// when constructed from a power.
struct DriveField {
    double omega_d = 0.0;        // drive frequency (rad/s)
    Complex amplitude{0.0, 0.0}; // F (1/sqrt(s))

    double photon_rate() const { return std::norm(amplitude); }
};

// dBm at the chip -> F with arg F = 0. |F|^2 = P / (hbar * omega_d).
Complex amplitude_from_power(double power_dbm, double omega_d);

// Inverse of amplitude_from_power (phase discarded).
double power_from_amplitude(Complex amplitude, double omega_d);

// Hierarchy rate coefficient
//   eps_{m,n} = i(m-n) Omega_0 + i(m-n)(m+n-1) K/2
//               - (m+n)(kappa_ex+kappa_in)/2 - (m-n)^2 gamma_p.
Complex epsilon(int m, int n, const SystemParams& params);

// Detuned variant eps'_{m,n} = eps_{m,n} - i(m-n) omega_d.
Complex epsilon_detuned(int m, int n, const SystemParams& params, double omega_d);

// Index pair on the truncated (m, n) moment grid, 0 <= m, n <= n_max.
struct MomentIndex {
    int m = 0;
    int n = 0;
    int n_max = 0;

    int flat() const { return m * (n_max + 1) + n; }
    static MomentIndex from_flat(int flat, int n_max);
};

// Strictly increasing list of angular frequencies.
struct FrequencyGrid {
    std::vector<double> points;  // rad/s

    static FrequencyGrid uniform(double center, double half_span, int count);

    void validate() const;       // throws ConfigError if malformed
    bool is_uniform(double rel_tol = 1e-9) const;
    double step() const;         // spacing of a uniform grid
    std::size_t size() const { return points.size(); }
};

}  // namespace knr
