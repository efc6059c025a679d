#include "sblica/hankel.hpp"

#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "sblica/errors.hpp"

namespace sblica {

const HankelFilter& HankelFilter::j0() {
    static const HankelFilter filter{0, detail::kFilterSpacing, detail::kFilterBase,
                                     detail::kFilterWeightsJ0};
    return filter;
}

const HankelFilter& HankelFilter::j1() {
    static const HankelFilter filter{1, detail::kFilterSpacing, detail::kFilterBase,
                                     detail::kFilterWeightsJ1};
    return filter;
}

std::complex<double> hankel_transform(
    const std::function<std::complex<double>(double)>& kernel, const HankelFilter& filter,
    double r_m) {
    if (!(r_m > 0.0)) {
        throw std::domain_error("hankel_transform: r must be positive, got " +
                                std::to_string(r_m));
    }
    std::complex<double> sum(0.0, 0.0);
    for (int j = 0; j < detail::kFilterLength; ++j) {
        const double lambda = filter.base[j] / r_m;
        const std::complex<double> value = kernel(lambda);
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
            std::ostringstream os;
            os << "hankel_transform: kernel returned a non-finite value at abscissa lambda="
               << lambda << " (j=" << j << ", r=" << r_m << ")";
            throw std::domain_error(os.str());
        }
        sum += value * filter.coefficients[j];
    }
    return sum / r_m;
}

double hankel_self_test_max_rel_error() {
    // Lipschitz pairs with a = 1:
    //   int_0^inf J0(l r) l e^-l dl = 1 / (1 + r^2)^{3/2}
    //   int_0^inf J1(l r) e^-l dl   = (1 - 1/sqrt(1 + r^2)) / r
    double worst = 0.0;
    const int n = 121;
    const double lo = std::log(0.1);
    const double hi = std::log(10.0);
    for (int i = 0; i < n; ++i) {
        const double r = std::exp(lo + (hi - lo) * i / (n - 1));

        const auto got0 = hankel_transform(
            [](double l) { return std::complex<double>(l * std::exp(-l), 0.0); },
            HankelFilter::j0(), r);
        const double want0 = 1.0 / std::pow(1.0 + r * r, 1.5);
        worst = std::max(worst, std::abs(got0.real() - want0) / std::abs(want0));

        const auto got1 = hankel_transform(
            [](double l) { return std::complex<double>(std::exp(-l), 0.0); },
            HankelFilter::j1(), r);
        const double want1 = (1.0 - 1.0 / std::sqrt(1.0 + r * r)) / r;
        worst = std::max(worst, std::abs(got1.real() - want1) / std::abs(want1));
    }
    return worst;
}

void ensure_hankel_filters_valid() {
    static std::once_flag flag;
    static double error = 0.0;
    std::call_once(flag, [] { error = hankel_self_test_max_rel_error(); });
    if (!(error < 1e-6)) {
        throw InternalError("Hankel filter self-test breach: max relative error " +
                            std::to_string(error) + " exceeds 1e-6");
    }
}

}  // namespace sblica
