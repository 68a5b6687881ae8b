#pragma once

// Composite Gauss-Legendre quadrature, kept separate from the library's
// adaptive Simpson so expected values do not share its code paths.

#include <cmath>
#include <vector>

namespace oracle {

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

inline Rule gauss_legendre(int n) {
    Rule r;
    for (int i = 1; i <= n; ++i) {
        double x = std::cos(M_PI * (i - 0.25) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.nodes.push_back(x);
        r.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
    }
    return r;
}

template <class F>
double integrate(F&& f, double a, double b, int panels = 64) {
    static const Rule rule = gauss_legendre(20);
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        double s = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
        sum += 0.5 * h * s;
    }
    return sum;
}

}  // namespace oracle
