#ifndef KAWAHARA_QUADRATURE_HPP
#define KAWAHARA_QUADRATURE_HPP

#include <Eigen/Dense>
#include <complex>

namespace kawahara {

struct GaussRule {
    Eigen::ArrayXd nodes;    // on [-1, 1]
    Eigen::ArrayXd weights;
};

// Cached Gauss-Legendre rule of order n (nodes by Newton on P_n).
const GaussRule& gauss_legendre(int n);

// Integrate f over [a, b] with one n-point Gauss-Legendre panel.
template <class F>
auto gl_panel(F&& f, double a, double b, int n) {
    const GaussRule& r = gauss_legendre(n);
    const double h = 0.5 * (b - a), m = 0.5 * (a + b);
    using R = decltype(f(m));
    R acc{};
    for (int i = 0; i < r.nodes.size(); ++i)
        acc += R(r.weights[i] * f(m + h * r.nodes[i]));
    return R(h * acc);
}

// Integrate over [a, b] split into `panels` equal Gauss panels.
template <class F>
auto gl_composite(F&& f, double a, double b, int panels, int n) {
    using R = decltype(f(a));
    R acc{};
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p)
        acc += gl_panel(f, a + p * h, a + (p + 1) * h, n);
    return acc;
}

// Chebyshev interpolant on panels [x0,x1]; evaluation by Clenshaw recurrence.
struct ChebPanel {
    double x0, x1;
    Eigen::ArrayXd coef;
    double eval(double x) const;
};

struct ChebTable {
    std::vector<ChebPanel> panels;
    double xmin = 0, xmax = 0;
    bool contains(double x) const { return x >= xmin && x <= xmax; }
    double eval(double x) const;

    // Build degree-`deg` panels over the given edges from point samples of f.
    template <class F>
    static ChebTable build(F&& f, const std::vector<double>& edges, int deg) {
        ChebTable t;
        t.xmin = edges.front();
        t.xmax = edges.back();
        Eigen::ArrayXd theta(deg + 1);
        for (int k = 0; k <= deg; ++k)
            theta[k] = std::cos(M_PI * (k + 0.5) / (deg + 1));
        for (size_t p = 0; p + 1 < edges.size(); ++p) {
            ChebPanel cp;
            cp.x0 = edges[p];
            cp.x1 = edges[p + 1];
            Eigen::ArrayXd vals(deg + 1);
            for (int k = 0; k <= deg; ++k)
                vals[k] = f(0.5 * (cp.x0 + cp.x1) + 0.5 * (cp.x1 - cp.x0) * theta[k]);
            cp.coef = chebyshev_coefficients(vals);
            t.panels.push_back(std::move(cp));
        }
        return t;
    }

    static Eigen::ArrayXd chebyshev_coefficients(const Eigen::ArrayXd& nodal_values);
};

} // namespace kawahara

#endif
