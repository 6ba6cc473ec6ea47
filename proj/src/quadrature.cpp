#include "kawahara/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace kawahara {

static GaussRule make_rule(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
    return it->second;
}

double ChebPanel::eval(double x) const {
    const double s = (2.0 * x - (x0 + x1)) / (x1 - x0);
    double b0 = 0, b1 = 0;
    for (int k = int(coef.size()) - 1; k >= 1; --k) {
        double b2 = b1;
        b1 = b0;
        b0 = 2.0 * s * b1 - b2 + coef[k];
    }
    return s * b0 - b1 + coef[0];
}

double ChebTable::eval(double x) const {
    // panels are ordered; binary search for the containing one
    size_t lo = 0, hi = panels.size() - 1;
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (x <= panels[mid].x1)
            hi = mid;
        else
            lo = mid + 1;
    }
    return panels[lo].eval(x);
}

Eigen::ArrayXd ChebTable::chebyshev_coefficients(const Eigen::ArrayXd& v) {
    const int m = int(v.size());
    Eigen::ArrayXd c(m);
    for (int j = 0; j < m; ++j) {
        double s = 0;
        for (int k = 0; k < m; ++k)
            s += v[k] * std::cos(M_PI * j * (k + 0.5) / m);
        c[j] = 2.0 * s / m;
    }
    c[0] *= 0.5;
    return c;
}

} // namespace kawahara
