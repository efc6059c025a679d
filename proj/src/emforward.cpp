#include "sblica/emforward.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "sblica/constants.hpp"
#include "sblica/errors.hpp"
#include "sblica/hankel.hpp"

namespace sblica {

// Conventions: time dependence e^{-iwt}; z positive down from the sea
// surface. Per layer n: k_n^2 = i w mu0 sigma_n and the vertical
// wavenumber u_n = sqrt(lambda^2 - k_n^2) with Re(u) >= 0, so e^{-u h}
// decays for h > 0 and no growing exponential is ever formed.

namespace {

using cd = std::complex<double>;

cd vertical_wavenumber(double lambda, cd k2) {
    cd u = std::sqrt(cd(lambda * lambda, 0.0) - k2);
    if (u.real() < 0.0) u = -u;
    return u;
}

struct SourceLayerGeometry {
    int index;        // seawater layer
    double top;       // depth of its top interface
    double bottom;    // depth of its bottom interface (seafloor)
    double thickness;
};

/// Spectral-domain machinery for one (model, frequency) pair.
class SpectralStack {
  public:
    SpectralStack(const LayeredModel& model, double frequency, const SourceLayerGeometry& geom)
        : geom_(geom) {
        const double omega = 2.0 * kPi * frequency;
        for (const Layer& layer : model.layers()) {
            sigma_.push_back(layer.conductivity_S_per_m);
            k2_.push_back(cd(0.0, omega * kMu0 * layer.conductivity_S_per_m));
        }
        depths_ = model.interface_depths();
    }

    struct ModeAmplitudes {
        cd phi_te;     // TE potential (Hz carrier) at the receiver depth
        cd dphi_tm;    // d/dz of the TM potential (Ez carrier) at the receiver depth
    };

    /// Reflected-field (secondary) potentials in the source layer at
    /// depth zr, for source depth zs. The direct term is excluded; it is
    /// evaluated in closed form by the caller.
    ModeAmplitudes secondary(double lambda, double zs, double zr) const {
        const int s = geom_.index;
        const cd us = vertical_wavenumber(lambda, k2_[s]);

        const cd ru_te = stack_up(lambda, s, Mode::TE);
        const cd rd_te = stack_down(lambda, s, Mode::TE);
        const cd ru_tm = stack_up(lambda, s, Mode::TM);
        const cd rd_tm = stack_down(lambda, s, Mode::TM);

        const cd et = std::exp(-us * (zs - geom_.top));     // source to top
        const cd eb = std::exp(-us * (geom_.bottom - zs));  // source to bottom
        const cd eh = std::exp(-us * geom_.thickness);
        const cd obs_down = std::exp(-us * (zr - geom_.top));
        const cd obs_up = std::exp(us * (zr - geom_.bottom));

        // Down-going amplitude C_dn launched at the top interface and
        // up-going C_up at the bottom interface, from source amplitudes
        // (S_dn, S_up) with the waveguide multiple denominator M.
        //   C_dn = R_up [S_up et + R_dn eh S_dn eb] / M
        //   C_up = R_dn [S_dn eb + R_up eh S_up et] / M
        ModeAmplitudes out;
        {
            // TE: S_dn = S_up = 1/(2 us)
            const cd m = 1.0 - ru_te * rd_te * eh * eh;
            const cd c_dn = ru_te * (et + rd_te * eh * eb) / (2.0 * us) / m;
            const cd c_up = rd_te * (eb + ru_te * eh * et) / (2.0 * us) / m;
            out.phi_te = c_dn * obs_down + c_up * obs_up;
        }
        {
            // TM (potential = Ez): S_dn = 1/2, S_up = -1/2
            const cd m = 1.0 - ru_tm * rd_tm * eh * eh;
            const cd c_dn = ru_tm * (-0.5 * et + rd_tm * eh * 0.5 * eb) / m;
            const cd c_up = rd_tm * (0.5 * eb - ru_tm * eh * 0.5 * et) / m;
            out.dphi_tm = -us * c_dn * obs_down + us * c_up * obs_up;
        }
        return out;
    }

  private:
    enum class Mode { TE, TM };

    cd interface_reflection(double lambda, int from, int into, Mode mode) const {
        const cd ua = vertical_wavenumber(lambda, k2_[from]);
        const cd ub = vertical_wavenumber(lambda, k2_[into]);
        if (mode == Mode::TE) {
            return (ua - ub) / (ua + ub);
        }
        return (sigma_[into] * ua - sigma_[from] * ub) / (sigma_[into] * ua + sigma_[from] * ub);
    }

    /// Recursive stack reflection looking down from the bottom of layer s.
    cd stack_down(double lambda, int s, Mode mode) const {
        const int n = static_cast<int>(sigma_.size());
        cd r(0.0, 0.0);
        for (int m = n - 2; m >= s; --m) {
            const cd rm = interface_reflection(lambda, m, m + 1, mode);
            if (m == n - 2) {
                r = rm;
            } else {
                const double h = depths_[m + 1] - depths_[m];
                const cd e = std::exp(-2.0 * vertical_wavenumber(lambda, k2_[m + 1]) * h);
                r = (rm + r * e) / (1.0 + rm * r * e);
            }
        }
        return r;
    }

    /// Recursive stack reflection looking up from the top of layer s.
    cd stack_up(double lambda, int s, Mode mode) const {
        cd r(0.0, 0.0);
        for (int m = 1; m <= s; ++m) {
            const cd rm = interface_reflection(lambda, m, m - 1, mode);
            if (m == 1) {
                r = rm;
            } else {
                const double h = depths_[m - 1] - depths_[m - 2];
                const cd e = std::exp(-2.0 * vertical_wavenumber(lambda, k2_[m - 1]) * h);
                r = (rm + r * e) / (1.0 + rm * r * e);
            }
        }
        return r;
    }

    SourceLayerGeometry geom_;
    std::vector<double> sigma_;
    std::vector<cd> k2_;
    std::vector<double> depths_;
};

}  // namespace

std::complex<double> wholespace_ex(double conductivity_S_per_m, double frequency_hz,
                                   double dipole_moment_am, double dx_m, double dy_m,
                                   double dz_m) {
    if (!(conductivity_S_per_m > 0.0) || !(frequency_hz > 0.0)) {
        throw std::domain_error("wholespace_ex: conductivity and frequency must be positive");
    }
    const double R2 = dx_m * dx_m + dy_m * dy_m + dz_m * dz_m;
    if (!(R2 > 0.0)) {
        throw std::domain_error("wholespace_ex: zero source-receiver separation");
    }
    const double R = std::sqrt(R2);
    const cd k = complex_wavenumber(conductivity_S_per_m, frequency_hz);
    const cd ikR = cd(0.0, 1.0) * k * R;
    const cd k2R2 = k * k * R2;
    const double x2_over_R2 = dx_m * dx_m / R2;
    return dipole_moment_am * std::exp(ikR) /
           (4.0 * kPi * conductivity_S_per_m * R2 * R) *
           (k2R2 + ikR - 1.0 + x2_over_R2 * (3.0 - 3.0 * ikR - k2R2));
}

FieldProfile layered_ex(const LayeredModel& model, const Survey& survey) {
    const ValidationReport report = validate_model(model, survey);
    if (!report.ok()) {
        throw std::invalid_argument("layered_ex: invalid model/survey\n" + report.to_string());
    }
    ensure_hankel_filters_valid();

    SourceLayerGeometry geom;
    geom.index = 1;  // seawater
    geom.top = 0.0;
    geom.bottom = model.seafloor_depth_m();
    geom.thickness = geom.bottom - geom.top;

    const double zs = survey.source_depth_m(model);
    const double zr = survey.receiver_depth_or_seafloor(model);
    const double sigma_s = model.seawater_conductivity();
    const double omega = 2.0 * kPi * survey.frequency_hz;
    const cd i_omega_mu0(0.0, omega * kMu0);
    const double theta = survey.azimuth_rad;
    const double cos2 = std::cos(theta) * std::cos(theta);
    const double sin2 = std::sin(theta) * std::sin(theta);
    const double cos_2theta = std::cos(2.0 * theta);
    const double p = survey.dipole_moment_am;

    const SpectralStack stack(model, survey.frequency_hz, geom);

    std::vector<cd> ex;
    ex.reserve(survey.offsets_m.size());
    for (const double r : survey.offsets_m) {
        // Reflected part through the digital filter. Ex decomposes into
        // three Hankel integrals of the mode potentials:
        //   Ex = p/(2 pi) [ cos^2(th) I0TM / sigma_s
        //                   + sin^2(th) i w mu0 I0TE
        //                   + cos(2 th) / r * I1 ]
        const auto i0_tm = hankel_transform(
            [&](double lambda) {
                return stack.secondary(lambda, zs, zr).dphi_tm * lambda;
            },
            HankelFilter::j0(), r);
        const auto i0_te = hankel_transform(
            [&](double lambda) {
                return stack.secondary(lambda, zs, zr).phi_te * lambda;
            },
            HankelFilter::j0(), r);
        const auto i1 = hankel_transform(
            [&](double lambda) {
                const auto amp = stack.secondary(lambda, zs, zr);
                return i_omega_mu0 * amp.phi_te - amp.dphi_tm / sigma_s;
            },
            HankelFilter::j1(), r);

        const cd secondary = p / (2.0 * kPi) *
                             (cos2 * i0_tm / sigma_s + sin2 * i_omega_mu0 * i0_te +
                              cos_2theta / r * i1);

        const cd direct = wholespace_ex(sigma_s, survey.frequency_hz, p, r * std::cos(theta),
                                        r * std::sin(theta), zr - zs);
        const cd value = direct + secondary;
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
            throw InternalError("layered_ex: non-finite field at offset " + std::to_string(r));
        }
        ex.push_back(value);
    }

    return FieldProfile(survey.offsets_m, std::move(ex), Provenance::LayeredSolver,
                        survey_fingerprint(model, survey));
}

}  // namespace sblica
