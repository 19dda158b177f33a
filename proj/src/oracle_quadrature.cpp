#include <cmath>
#include <stdexcept>

#include "tdsts/oracle.hpp"

namespace tdsts::oracle {

double quad_integrate(const std::function<double(double)>& f, double center,
                      double sigma, double halfwidth_sigmas, int points) {
    if (!std::isfinite(center)) throw IntegrationError("quad_integrate: center must be finite");
    if (!std::isfinite(sigma) || sigma <= 0.0)
        throw IntegrationError("quad_integrate: sigma must be finite and > 0");
    if (points < 101 || points % 2 == 0)
        throw IntegrationError("quad_integrate: points must be odd and >= 101");
    if (!std::isfinite(halfwidth_sigmas) || halfwidth_sigmas < 8.0)
        throw IntegrationError("quad_integrate: halfwidth_sigmas must be >= 8");

    const double a = center - halfwidth_sigmas * sigma;
    const double b = center + halfwidth_sigmas * sigma;
    const double h = (b - a) / static_cast<double>(points - 1);

    double sum = 0.0;
    for (int i = 0; i < points; ++i) {
        const double x = a + h * static_cast<double>(i);
        const double v = f(x);
        if (!std::isfinite(v))
            throw IntegrationError("quad_integrate: integrand returned a non-finite value");
        double w = 2.0 + 2.0 * (i % 2);  // 4 on odd nodes, 2 on even interior
        if (i == 0 || i == points - 1) w = 1.0;
        sum += w * v;
    }
    return sum * h / 3.0;
}

}  // namespace tdsts::oracle
