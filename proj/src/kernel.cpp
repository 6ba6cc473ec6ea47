#include "kawahara/kernel.hpp"

#include <cmath>
#include <mutex>

#include "kawahara/gamma.hpp"
#include "kawahara/util.hpp"

namespace kawahara {

using cplx = std::complex<double>;
static const cplx I(0.0, 1.0);

const KernelConstants& kernel_constants() {
    static const KernelConstants kc = [] {
        KernelConstants c;
        const __float128 pi = qm::pi<__float128>();
        __float128 g15 = gamma_q(__float128(1) / 5);
        __float128 g25 = gamma_q(__float128(2) / 5);
        __float128 g35 = gamma_q(__float128(3) / 5);
        __float128 g45 = gamma_q(__float128(4) / 5);
        __float128 c1 = cosq(pi / 10), c3 = cosq(3 * pi / 10);
        c.B0 = double(c1 * g15 / (5 * pi));
        c.B1 = double(-c3 * g25 / (5 * pi));
        c.B2 = double(-c3 * g35 / (5 * pi));
        c.B3 = double(c1 * g45 / (5 * pi));
        c.M = double(1 / ((c1 * g15 / (5 * pi)) * g45));
        return c;
    }();
    return kc;
}

const std::vector<double>& kernel_derivatives_at_zero() {
    static const std::vector<double> d = [] {
        const KernelConstants& c = kernel_constants();
        std::vector<double> v(90, 0.0);
        v[0] = c.B0;
        v[1] = c.B1;
        v[2] = c.B2;
        v[3] = c.B3;
        v[4] = 0.0;
        for (size_t n = 5; n < v.size(); ++n)
            v[n] = -(double(n) - 4.0) / 5.0 * v[n - 5];
        return v;
    }();
    return d;
}

// ---- Taylor regime -------------------------------------------------------

static double eval_taylor(double x, int n) {
    const auto& d = kernel_derivatives_at_zero();
    double acc = 0, xp = 1, fact = 1;
    for (size_t k = n; k < d.size(); ++k) {
        int m = int(k) - n;
        if (m > 0) {
            xp *= x;
            fact *= m;
        }
        acc += d[k] * xp / fact;
    }
    return acc;
}

// ---- rotated-ray regime (x > 0) -----------------------------------------
//
// I+ = int_0^inf xi^n e^{i(x xi + xi^5)} dxi rotated to arg xi = pi/10 where
// e^{i xi^5} = e^{-r^5}; B^(n)(x) = (1/pi) Re[i^n I+].

static cplx half_integral_ray(double x, int n, int panels, int nodes, bool upper_left) {
    // upper_left: the (-inf, 0] half-axis rotated to arg 9pi/10 instead.
    const double R = 2.4;
    const cplx dir = upper_left ? std::polar(1.0, 9.0 * M_PI / 10.0)
                                : std::polar(1.0, M_PI / 10.0);
    auto f = [&](double r) {
        cplx z = dir * r;
        return std::pow(z, n) * std::exp(I * (x * z + z * z * z * z * z)) * dir;
    };
    cplx acc = gl_composite(f, 0.0, R, panels, nodes);
    return upper_left ? -acc : acc; // orientation: integral from -inf to 0
}

// ---- stationary-point regime (x < 0) -------------------------------------
//
// Real saddles at +-((-x)/5)^(1/4); integrate the head through them on the
// real axis and connect the endpoint at xi_c to infinity along arg pi/10
// (arg 9pi/10 for the mirrored half), where the integrand decays.

static cplx half_integral_nsd(double x, int n, int refine, int nodes, bool left_half) {
    const double ax = -x;
    const double xi0 = std::pow(ax / 5.0, 0.25);
    const double xic = 1.35 * std::max(xi0, 0.8);
    const double sgn = left_half ? -1.0 : 1.0;

    auto f = [&](cplx z) {
        return std::pow(z, n) * std::exp(I * (x * z + z * z * z * z * z));
    };

    // int_0^xic f(sgn r) dr: equals the real-axis piece on either half-axis
    const double phase = ax * xic + std::pow(xic, 5.0);
    int hp = std::max(8, int(std::ceil(phase / 2.5))) * refine;
    cplx head{};
    {
        double h = xic / hp;
        for (int p = 0; p < hp; ++p)
            head += gl_panel([&](double r) { return f(sgn * r); }, p * h,
                             (p + 1) * h, nodes);
    }
    const cplx dir = left_half ? std::polar(1.0, 9.0 * M_PI / 10.0)
                               : std::polar(1.0, M_PI / 10.0);
    const double rho = std::sin(M_PI / 10.0) * (5.0 * std::pow(xic, 4.0) - ax);
    const double Lt = 40.0 / rho + 2.0 / (1.0 + std::pow(ax, 0.2));
    int tp = std::max(10, int(std::ceil(3.0 * rho * Lt / 2.5))) * refine;
    cplx tail{};
    {
        double h = Lt / tp;
        auto g = [&](double s) { return f(sgn * xic + dir * s) * dir; };
        for (int p = 0; p < tp; ++p)
            tail += gl_panel(g, p * h, (p + 1) * h, nodes);
    }
    // right half: int_0^inf = head + outward tail;
    // left half: int_-inf^0 = -outward tail + head
    return left_half ? (head - tail) : (head + tail);
}

static cplx half_integral(double x, int n, int refine, const KernelEvaluator& cfg,
                          bool left_half) {
    if (x >= 0) {
        int panels = std::max(4, int(std::ceil(x * 2.4 / 3.0))) * refine;
        return half_integral_ray(x, n, panels, cfg.nodes, left_half);
    }
    return half_integral_nsd(x, n, refine, cfg.nodes, left_half);
}

double eval_kernel(double x, int n, const KernelEvaluator& cfg) {
    cfg.validate();
    if (n < 0 || n > 4) throw DomainError("eval_kernel: derivative order must be 0..4");
    if (!std::isfinite(x)) throw DomainError("eval_kernel: x must be finite");

    if (std::fabs(x) <= cfg.taylor_radius) return eval_taylor(x, n);

    const double tol = cfg.tolerance_at(x);
    auto value = [&](int refine) {
        cplx ip = half_integral(x, n, refine, cfg, false);
        return (1.0 / M_PI) * std::real(std::pow(I, n) * ip);
    };
    const int rounds = std::max(1, cfg.max_refine);
    double prev = value(1);
    for (int r = 1;; ++r) {
        double cur = value(1 << r);
        double err = std::fabs(cur - prev);
        if (err <= 0.5 * tol) return cur;
        if (r >= rounds)
            throw AccuracyError("eval_kernel: quadrature did not converge", 2 * err, tol);
        prev = cur;
    }
}

std::complex<double> eval_kernel_raw(double x, int n, const KernelEvaluator& cfg) {
    cfg.validate();
    if (n < 0 || n > 4) throw DomainError("eval_kernel_raw: derivative order must be 0..4");
    cplx ip = half_integral(x, n, 2, cfg, false);
    cplx im = half_integral(x, n, 2, cfg, true);
    return std::pow(I, n) * (ip + im) / (2.0 * M_PI);
}

// ---- Mellin transforms ----------------------------------------------------

double mellin_transform(double lambda, MellinSide side) {
    if (side == MellinSide::plus) {
        if (!(lambda > 0)) throw DomainError("mellin_transform: plus side needs lambda > 0");
        double n = std::round((lambda - 1.0) / 5.0);
        double u = lambda - 1.0 - 5.0 * n;
        if (n >= 0 && std::fabs(u) < 0.5) {
            // reflection-reduced form, finite through lambda = 1 + 5n
            double sign = (long(n) % 2 == 0) ? 1.0 : -1.0;
            return gamma_d(lambda) * sign * 2.0 * std::cos(M_PI * u / 5.0) /
                   (5.0 * gamma_d(1.0 + n + u / 5.0));
        }
        return gamma_d(lambda) * gamma_d((1.0 - lambda) / 5.0) *
               std::cos((1.0 + 4.0 * lambda) * M_PI / 10.0) / (5.0 * M_PI);
    }
    if (!(lambda > 0.0 && lambda < 0.375))
        throw DomainError("mellin_transform: minus side needs 0 < lambda < 3/8");
    return gamma_d(lambda) * gamma_d((1.0 - lambda) / 5.0) *
           std::cos((1.0 - 6.0 * lambda) * M_PI / 10.0) / (5.0 * M_PI);
}

// ---- kernel table ---------------------------------------------------------

KernelTable::KernelTable(double xmin, const KernelEvaluator& cfg) : xmin_(xmin), cfg_(cfg) {
    KernelEvaluator tight = cfg;
    tight.tol_near = std::min(cfg.tol_near, 1e-11);
    tight.tol_far = std::min(cfg.tol_far, 1e-9);
    std::vector<double> edges;
    double x = xmin_;
    edges.push_back(x);
    while (x < 33.0) {
        double len = (x > -8.0) ? 1.2 : std::min(1.2, 7.0 / std::pow(-x, 0.25));
        x = std::min(x + len, 33.0);
        edges.push_back(x);
    }
    table_ = ChebTable::build([&](double xx) { return eval_kernel(xx, 0, tight); },
                              edges, 18);
}

double KernelTable::operator()(double x) const {
    if (x > 33.0) return 0.0;
    if (x < xmin_) return eval_kernel(x, 0, cfg_);
    return table_.eval(x);
}

const KernelTable& shared_kernel_table() {
    static const KernelTable table(-360.0);
    return table;
}

} // namespace kawahara
