#pragma once

#include <array>
#include <complex>
#include <functional>

namespace sblica {

namespace detail {
inline constexpr int kFilterLength = 120;
extern const std::array<double, kFilterLength> kFilterBase;
extern const std::array<double, kFilterLength> kFilterWeightsJ0;
extern const std::array<double, kFilterLength> kFilterWeightsJ1;
inline constexpr double kFilterSpacing = 0.115;  // ln-spacing of the base
}  // namespace detail

/// Digital linear filter for Hankel transforms of order 0 or 1.
///
/// integral_0^inf K(lambda) J_order(lambda r) dlambda
///   ~= (1/r) sum_j coefficients[j] * K(base[j] / r)
///
/// The J0 and J1 filters share one 120-point log-spaced base.
struct HankelFilter {
    int order;
    double abscissa_spacing;
    const std::array<double, detail::kFilterLength>& base;
    const std::array<double, detail::kFilterLength>& coefficients;

    static const HankelFilter& j0();
    static const HankelFilter& j1();
};

/// Applies the filter to a kernel evaluated at the abscissae b_j / r.
/// Throws std::domain_error for r <= 0 or when the kernel returns a
/// non-finite value (the message names the offending abscissa).
std::complex<double> hankel_transform(
    const std::function<std::complex<double>(double)>& kernel, const HankelFilter& filter,
    double r_m);

/// Max relative error of both filters on the closed-form Lipschitz pairs
///   integral J0(lr) l e^-l dl = 1/(1+r^2)^{3/2}
///   integral J1(lr) e^-l dl   = (1 - 1/sqrt(1+r^2)) / r
/// over r in [0.1, 10].
double hankel_self_test_max_rel_error();

/// Runs the self-test once per process; throws InternalError if the
/// 1e-6 accuracy contract is breached.
void ensure_hankel_filters_valid();

}  // namespace sblica
