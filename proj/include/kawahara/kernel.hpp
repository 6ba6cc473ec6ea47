#ifndef KAWAHARA_KERNEL_HPP
#define KAWAHARA_KERNEL_HPP

#include <complex>
#include <memory>
#include <vector>

#include "kawahara/errors.hpp"
#include "kawahara/quadrature.hpp"

namespace kawahara {

// Closed-form constants of the oscillatory kernel B(x) = (1/2pi) int e^{i x xi + i xi^5} dxi.
struct KernelConstants {
    double B0, B1, B2, B3;      // B(0), B'(0), B''(0), B'''(0)
    double M;                   // 1 / (B(0) Gamma(4/5))
    long half_line_num = 2;     // int_0^inf B = 2/5, kept as an exact rational
    long half_line_den = 5;
    double half_line_integral() const {
        return double(half_line_num) / double(half_line_den);
    }
};

// Gamma evaluated in extended precision, cached.
const KernelConstants& kernel_constants();

// Taylor coefficients B^(n)(0) seeded by the constants and the recurrence
// B'''' = -(x/5) B.
const std::vector<double>& kernel_derivatives_at_zero();

struct KernelEvaluator {
    double tol_near = 1e-10;   // absolute tolerance for x >= -10
    double tol_far = 1e-6;     // relaxed tolerance for x < -10
    int nodes = 16;            // Gauss nodes per panel
    double taylor_radius = 1.0;
    int max_refine = 5;        // panel-doubling rounds

    KernelEvaluator() = default;
    void validate() const {
        if (!(tol_near > 0) || !(tol_far > 0))
            throw DomainError("KernelEvaluator: tolerance must be positive");
        if (nodes < 8) throw DomainError("KernelEvaluator: need >= 8 nodes");
        if (taylor_radius < 0 || max_refine < 0)
            throw DomainError("KernelEvaluator: bad configuration");
    }
    double tolerance_at(double x) const { return x >= -10.0 ? tol_near : tol_far; }
};

// B^(n)(x) for n = 0..4 to the evaluator tolerance.
double eval_kernel(double x, int n, const KernelEvaluator& cfg = {});

// The two half-axis contour integrals evaluated independently; their sum is
// (2 pi) B^(n)(x) and its imaginary part measures the quadrature's reality defect.
std::complex<double> eval_kernel_raw(double x, int n, const KernelEvaluator& cfg = {});

enum class MellinSide { plus, minus };

// Closed-form Mellin transforms int_0^inf x^(lambda-1) B(+-x) dx; plus side is
// continued through the removable points lambda = 1 + 5n.
double mellin_transform(double lambda, MellinSide side);

// Piecewise-Chebyshev table of B over [xmin, 33]; 0 beyond the right edge,
// direct evaluation below the left edge.
class KernelTable {
  public:
    explicit KernelTable(double xmin = -360.0, const KernelEvaluator& cfg = {});
    double operator()(double x) const;
    double xmin() const { return xmin_; }

  private:
    double xmin_;
    KernelEvaluator cfg_;
    ChebTable table_;
};

// Process-wide shared table (built once, thread-safe).
const KernelTable& shared_kernel_table();

} // namespace kawahara

#endif
