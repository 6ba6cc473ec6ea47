#ifndef KAWAHARA_GRIDS_HPP
#define KAWAHARA_GRIDS_HPP

#include <Eigen/Dense>

#include "kawahara/errors.hpp"

namespace kawahara {

// Uniform time grid anchored at t = 0.
struct TimeGrid {
    double dt = 0;
    int n = 0;

    TimeGrid() = default;
    TimeGrid(double dt_, int n_) : dt(dt_), n(n_) {
        if (!(dt > 0)) throw GridError("TimeGrid: dt must be positive");
        if (n < 2) throw GridError("TimeGrid: need at least 2 samples");
    }
    double t(int i) const { return dt * i; }
    double horizon() const { return dt * (n - 1); }
    Eigen::ArrayXd times() const {
        return Eigen::ArrayXd::LinSpaced(n, 0.0, horizon());
    }
    bool operator==(const TimeGrid& o) const { return dt == o.dt && n == o.n; }
};

// Time-sampled signal vanishing for t <= 0 by convention.
struct CausalSignal {
    TimeGrid grid;
    Eigen::ArrayXd samples;

    CausalSignal() = default;
    CausalSignal(TimeGrid g, Eigen::ArrayXd s) : grid(g), samples(std::move(s)) {
        if (samples.size() != grid.n)
            throw GridError("CausalSignal: sample count does not match grid");
        if (!samples.allFinite())
            throw GridError("CausalSignal: samples must be finite");
    }
    static CausalSignal zero(TimeGrid g) {
        return CausalSignal(g, Eigen::ArrayXd::Zero(g.n));
    }
    template <class F>
    static CausalSignal from_function(TimeGrid g, F&& f) {
        Eigen::ArrayXd s(g.n);
        for (int i = 0; i < g.n; ++i) s[i] = f(g.t(i));
        return CausalSignal(g, std::move(s));
    }
    // Linear interpolation; 0 for t < 0, clamped at the right end.
    double operator()(double t) const {
        if (t <= 0) return (t == 0.0) ? samples[0] : 0.0;
        double u = t / grid.dt;
        int i = int(u);
        if (i >= grid.n - 1) return samples[grid.n - 1];
        double f = u - i;
        return samples[i] * (1 - f) + samples[i + 1] * f;
    }
};

// Periodic space grid on [-L, L), N a power of two.
struct SpaceGrid {
    double L = 0;
    int N = 0;

    SpaceGrid() = default;
    SpaceGrid(double L_, int N_) : L(L_), N(N_) {
        if (!(L > 0)) throw GridError("SpaceGrid: L must be positive");
        if (N < 64 || (N & (N - 1)) != 0)
            throw GridError("SpaceGrid: N must be a power of two >= 64");
    }
    double dx() const { return 2.0 * L / N; }
    double x(int j) const { return -L + dx() * j; }
    int index_of_zero() const { return N / 2; }
    Eigen::ArrayXd points() const {
        Eigen::ArrayXd p(N);
        for (int j = 0; j < N; ++j) p[j] = x(j);
        return p;
    }
    // signed wavenumber of FFT bin m (Nyquist zeroed)
    double k(int m) const {
        int mm = (m <= N / 2) ? m : m - N;
        if (m == N / 2) return 0.0;
        return M_PI / L * mm;
    }
    bool operator==(const SpaceGrid& o) const { return L == o.L && N == o.N; }
};

// Space-time field sampled on TimeGrid x (arbitrary) x-nodes; rows are time.
struct Field2D {
    TimeGrid tgrid;
    Eigen::ArrayXd xs;
    Eigen::ArrayXXd values; // (nt, nx)

    Field2D() = default;
    Field2D(TimeGrid tg, Eigen::ArrayXd xs_)
        : tgrid(tg), xs(std::move(xs_)),
          values(Eigen::ArrayXXd::Zero(tg.n, xs.size())) {}

    int nt() const { return tgrid.n; }
    int nx() const { return int(xs.size()); }
};

} // namespace kawahara

#endif
