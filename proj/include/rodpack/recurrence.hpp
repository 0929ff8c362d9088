#pragma once

// Breakpoint-aware quadrature solvers for the integral recurrences of the
// saturated hard-core model and the ghost retention probability, plus the
// nested quadrature for the limiting packing density constant.
//
// All marched tables share one scheme: a uniform grid whose step is chosen
// so that every integrand breakpoint is a grid point, an analytically exact
// running integral over the piecewise-constant base region, and composite
// trapezoid accumulation beyond it (O(h^2) per smooth piece). Values stored
// at a jump point are the upper-side limit, which is what the accumulation
// past the jump needs. est_error is a Richardson proxy: the solver also runs
// at twice the step and reports max |fine - coarse| / 3.

#include <string>
#include <utility>
#include <vector>

namespace rodpack {

struct RecurrenceTable {
    double grid_step = 0.0;
    double max_arg = 0.0;
    std::vector<double> values;  // values[i] at arg i * grid_step
    std::vector<double> breakpoints;
    double est_error = 0.0;

    std::size_t size() const { return values.size(); }
    double arg(std::size_t i) const { return double(i) * grid_step; }

    // Value at an argument that must lie on the grid (1e-6 relative snap).
    double value_at(double x) const;

    // Piecewise-linear interpolation for off-grid arguments.
    double value_interp(double x) const;

    // CSV export: header "arg,value,est_error".
    void write_csv(const std::string& path) const;
};

struct LimitEstimate {
    double value = 0.0;
    double at_arg = 0.0;
    double residual = 0.0;
};

struct SolveParams {
    double L_big = 200.0;  // where limits are read off
    double h = 0.0025;     // requested grid step
};

// Limiting mean covered fraction of the saturated classical process,
//   alpha = int_0^inf exp(-2 int_0^x (1-e^-y)/y dy) dx,
// to within `tolerance` (0 < tolerance <= 1e-3).
double renyi_alpha(double tolerance);

// E[N(L)]: expected rod count at saturation.
RecurrenceTable solve_density(double L_max, double h);

// f_r(L) = E[G(L, r)]: expected number of gaps of length >= r.
RecurrenceTable solve_gap_expectation(double r, double L_max, double h);

// Equality-marched upper bound on E[G(L, r)^2] (the second-moment recurrence
// inequality run as an equality; dominates the true second moment).
RecurrenceTable solve_second_moment_bound(double r, double L_max, double h);

// Ghost gap retention probability P(s): 1 for s <= 2, else the sliding
// window mean (2/(s+2)) int_{s-2}^s P.
RecurrenceTable solve_retention(double s_max, double h);

// c_r = lim f_r(L)/(L+2), read at params.L_big; the residual combines the
// tail proxy |g(L_big) - g(L_big/2)| with the table error estimate.
LimitEstimate limit_coefficient_c(double r, SolveParams params = {});

// h_r(L) table and lambda_r = lim h_r(L)/(L+2).
std::pair<RecurrenceTable, LimitEstimate> solve_h_and_lambda(
    double r, SolveParams params = {});

}  // namespace rodpack
