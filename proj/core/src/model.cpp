#include "knrspec/model.hpp"

#include <cmath>

namespace knr {

void SystemParams::validate() const {
    const auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(omega0) || !finite(kerr) || !finite(kappa_ex) || !finite(kappa_in) ||
        !finite(gamma_p)) {
        throw ConfigError("SystemParams: non-finite parameter");
    }
    if (omega0 <= 0.0) throw ConfigError("SystemParams: omega0 must be positive");
    if (kappa_ex <= 0.0) throw ConfigError("SystemParams: kappa_ex must be positive");
    if (kappa_in < 0.0) throw ConfigError("SystemParams: kappa_in must be non-negative");
    if (gamma_p < 0.0) throw ConfigError("SystemParams: gamma_p must be non-negative");
}

Complex amplitude_from_power(double power_dbm, double omega_d) {
    if (!std::isfinite(power_dbm)) throw ConfigError("amplitude_from_power: non-finite power");
    if (!(omega_d > 0.0) || !std::isfinite(omega_d)) {
        throw ConfigError("amplitude_from_power: omega_d must be positive");
    }
    const double watts = std::pow(10.0, (power_dbm - 30.0) / 10.0);
    return Complex(std::sqrt(watts / (hbar * omega_d)), 0.0);
}

double power_from_amplitude(Complex amplitude, double omega_d) {
    if (!(omega_d > 0.0) || !std::isfinite(omega_d)) {
        throw ConfigError("power_from_amplitude: omega_d must be positive");
    }
    const double watts = std::norm(amplitude) * hbar * omega_d;
    return 10.0 * std::log10(watts) + 30.0;
}

Complex epsilon(int m, int n, const SystemParams& params) {
    if (m < 0 || n < 0) throw ConfigError("epsilon: indices must be non-negative");
    const double md = static_cast<double>(m);
    const double nd = static_cast<double>(n);
    const double re = -(md + nd) * (params.kappa_ex + params.kappa_in) / 2.0 -
                      (md - nd) * (md - nd) * params.gamma_p;
    const double im =
        (md - nd) * params.omega0 + (md - nd) * (md + nd - 1.0) * params.kerr / 2.0;
    return Complex(re, im);
}

Complex epsilon_detuned(int m, int n, const SystemParams& params, double omega_d) {
    return epsilon(m, n, params) - Complex(0.0, (m - n) * omega_d);
}

MomentIndex MomentIndex::from_flat(int flat, int n_max) {
    MomentIndex idx;
    idx.n_max = n_max;
    idx.m = flat / (n_max + 1);
    idx.n = flat % (n_max + 1);
    return idx;
}

FrequencyGrid FrequencyGrid::uniform(double center, double half_span, int count) {
    if (count < 2) throw ConfigError("FrequencyGrid: need at least 2 points");
    if (!(half_span > 0.0)) throw ConfigError("FrequencyGrid: half_span must be positive");
    FrequencyGrid grid;
    grid.points.resize(static_cast<std::size_t>(count));
    const double step = 2.0 * half_span / (count - 1);
    for (int k = 0; k < count; ++k) {
        grid.points[static_cast<std::size_t>(k)] = center - half_span + step * k;
    }
    return grid;
}

void FrequencyGrid::validate() const {
    if (points.empty()) throw ConfigError("FrequencyGrid: empty");
    double prev = points.front();
    if (!std::isfinite(prev)) throw ConfigError("FrequencyGrid: non-finite point");
    for (std::size_t k = 1; k < points.size(); ++k) {
        if (!std::isfinite(points[k])) throw ConfigError("FrequencyGrid: non-finite point");
        if (!(points[k] > prev)) throw ConfigError("FrequencyGrid: not strictly increasing");
        prev = points[k];
    }
}

bool FrequencyGrid::is_uniform(double rel_tol) const {
    if (points.size() < 2) return true;
    const double h = (points.back() - points.front()) / (points.size() - 1);
    for (std::size_t k = 1; k < points.size(); ++k) {
        if (std::abs(points[k] - points[k - 1] - h) > rel_tol * std::abs(h)) return false;
    }
    return true;
}

double FrequencyGrid::step() const {
    if (points.size() < 2) throw ConfigError("FrequencyGrid: step() needs >= 2 points");
    return (points.back() - points.front()) / (points.size() - 1);
}

}  // namespace knr
