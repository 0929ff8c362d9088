#include "rodpack/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <system_error>

namespace rodpack {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

long long snap_index(double x, double h) {
    const double idx = x / h;
    const long long i = std::llround(idx);
    if (std::abs(idx - double(i)) > 1e-6)
        throw std::invalid_argument("argument does not lie on the table grid");
    return i;
}

// Smallest k with 1/k <= h_req and every mark an integer multiple of 1/k.
long long aligned_denominator(double h_req, const std::vector<double>& marks) {
    if (!(h_req > 0.0)) throw std::invalid_argument("grid step must be > 0");
    const long long k0 = (long long)std::ceil(1.0 / h_req - 1e-9);
    for (long long k = std::max(k0, 1ll); k <= k0 + 2'000'000; ++k) {
        bool ok = true;
        for (double m : marks) {
            const double mk = m * double(k);
            if (std::abs(mk - std::llround(mk)) > 1e-9 * (1.0 + mk)) {
                ok = false;
                break;
            }
        }
        if (ok) return k;
    }
    throw std::invalid_argument("no grid step aligns with the breakpoints");
}

struct MarchSpec {
    double r = 0.0;        // base-region breakpoint; 0 disables
    double constant = 0.0; // additive term ("1 +" for the density table)
    double factor = 2.0;   // prefactor numerator
};

// Upward march of F(L) = constant + (factor/(L-2)) * int_0^{L-2} F, with the
// base on [0,2) piecewise constant: 1 on [r,2) when r > 0, 0 elsewhere for
// the gap tables; identically 0 with constant = 1 for the density table.
std::vector<double> march_upward(const MarchSpec& s, long long n,
                                 long long k2, double h) {
    std::vector<double> f(std::size_t(n + 1), 0.0);
    std::vector<double> integral(std::size_t(n + 1), 0.0);
    const bool has_base = s.r > 0.0;
    for (long long i = 0; i <= std::min(k2, n); ++i) {
        const double x = double(i) * h;
        if (has_base) {
            f[std::size_t(i)] = (x >= s.r - 1e-12 && i < k2) ? 1.0 : 0.0;
            integral[std::size_t(i)] =
                std::clamp(x - s.r, 0.0, 2.0 - s.r);
        } else {
            f[std::size_t(i)] = (i == k2) ? s.constant : 0.0;
            integral[std::size_t(i)] = 0.0;
        }
    }
    if (has_base && k2 <= n) f[std::size_t(k2)] = 0.0;  // upper-side limit
    for (long long i = k2 + 1; i <= n; ++i) {
        const double L = double(i) * h;
        f[std::size_t(i)] =
            s.constant + s.factor / (L - 2.0) * integral[std::size_t(i - k2)];
        integral[std::size_t(i)] =
            integral[std::size_t(i - 1)] +
            0.5 * h * (f[std::size_t(i - 1)] + f[std::size_t(i)]);
    }
    return f;
}

RecurrenceTable marched_table(const MarchSpec& spec, double L_max,
                              double h_req, std::vector<double> marks) {
    if (!(L_max > 2.0)) throw std::invalid_argument("L_max must exceed 2");
    marks.push_back(2.0);
    const long long k = aligned_denominator(h_req, marks);
    const double h_fine = 1.0 / double(2 * k);
    const double h_coarse = 1.0 / double(k);
    const long long n_fine = (long long)std::floor(L_max / h_fine + 1e-9);
    const long long n_coarse = n_fine / 2;
    const auto fine = march_upward(spec, n_fine, 4 * k, h_fine);
    const auto coarse = march_upward(spec, n_coarse, 2 * k, h_coarse);
    double err = 0.0;
    for (long long i = 0; i <= n_coarse; ++i)
        err = std::max(err, std::abs(fine[std::size_t(2 * i)] -
                                     coarse[std::size_t(i)]));
    RecurrenceTable t;
    t.grid_step = h_fine;
    t.max_arg = double(n_fine) * h_fine;
    t.values = fine;
    std::sort(marks.begin(), marks.end());
    t.breakpoints = std::move(marks);
    t.est_error = err / 3.0;
    return t;
}

}  // namespace

double RecurrenceTable::value_at(double x) const {
    const long long i = snap_index(x, grid_step);
    if (i < 0 || std::size_t(i) >= values.size())
        throw std::out_of_range("argument outside the table range");
    return values[std::size_t(i)];
}

double RecurrenceTable::value_interp(double x) const {
    if (x < 0.0 || x > max_arg + 1e-12)
        throw std::out_of_range("argument outside the table range");
    const double idx = std::min(x / grid_step, double(values.size() - 1));
    const std::size_t i0 = std::size_t(idx);
    if (i0 + 1 >= values.size()) return values.back();
    const double w = idx - double(i0);
    return values[i0] * (1.0 - w) + values[i0 + 1] * w;
}

void RecurrenceTable::write_csv(const std::string& path) const {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw std::system_error(errno, std::generic_category(), path);
    std::fputs("arg,value,est_error\n", f);
    for (std::size_t i = 0; i < values.size(); ++i)
        std::fprintf(f, "%.17g,%.17g,%.17g\n", arg(i), values[i], est_error);
    std::fclose(f);
}

double renyi_alpha(double tolerance) {
    if (!(tolerance > 0.0) || tolerance > 1e-3)
        throw std::invalid_argument("renyi_alpha: tolerance must be in (0, 1e-3]");
    const double X = 50.0;  // numeric part; the tail is added analytically
    const auto integrand = [](double y) {
        return y == 0.0 ? 1.0 : -std::expm1(-y) / y;
    };
    // Outer integrand at x >= X equals e^{-2 gamma} x^{-2} (1 + O(e^{-X})),
    // so the omitted tail is e^{-2 gamma} / X to ~1e-23.
    const double tail = std::exp(-2.0 * kEulerGamma) / X;
    double prev = 0.0;
    for (int iter = 0;; ++iter) {
        const long long panels = 500ll << iter;  // inner nodes = 4*panels
        const long long m = 4 * panels;
        const double h = X / double(m);
        // cumulative Simpson for E(x) at even nodes
        std::vector<double> outer(std::size_t(m / 2) + 1);
        double e_acc = 0.0;
        double y_prev2 = integrand(0.0);
        outer[0] = 1.0;  // exp(-2 * 0)
        for (long long j = 2; j <= m; j += 2) {
            const double y1 = integrand(double(j - 1) * h);
            const double y2 = integrand(double(j) * h);
            e_acc += h / 3.0 * (y_prev2 + 4.0 * y1 + y2);
            y_prev2 = y2;
            outer[std::size_t(j / 2)] = std::exp(-2.0 * e_acc);
        }
        // Simpson over the outer nodes (spacing 2h)
        double alpha = outer.front() + outer.back();
        for (long long j = 1; j < m / 2; ++j)
            alpha += outer[std::size_t(j)] * (j % 2 ? 4.0 : 2.0);
        alpha *= 2.0 * h / 3.0;
        alpha += tail;
        if (iter > 0 && std::abs(alpha - prev) <= 0.25 * tolerance)
            return alpha;
        if (iter >= 12)
            throw std::runtime_error("renyi_alpha failed to converge");
        prev = alpha;
    }
}

RecurrenceTable solve_density(double L_max, double h) {
    if (h > 0.05) throw std::invalid_argument("solve_density: h must be <= 0.05");
    if (L_max < 4.0) throw std::invalid_argument("solve_density: L_max must be >= 4");
    return marched_table({0.0, 1.0, 2.0}, L_max, h, {});
}

RecurrenceTable solve_gap_expectation(double r, double L_max, double h) {
    if (!(r > 0.0 && r < 2.0))
        throw std::invalid_argument("solve_gap_expectation: r must be in (0, 2)");
    return marched_table({r, 0.0, 2.0}, L_max, h, {r, 2.0 + r, 4.0});
}

RecurrenceTable solve_second_moment_bound(double r, double L_max, double h) {
    if (!(r > 0.0 && r < 2.0))
        throw std::invalid_argument("solve_second_moment_bound: r must be in (0, 2)");
    return marched_table({r, 0.0, 4.0}, L_max, h, {r, 2.0 + r, 4.0});
}

RecurrenceTable solve_retention(double s_max, double h_req) {
    if (h_req > 0.01)
        throw std::invalid_argument("solve_retention: h must be <= 0.01");
    if (s_max < 4.0)
        throw std::invalid_argument("solve_retention: s_max must be >= 4");
    const long long k = aligned_denominator(h_req, {2.0});
    const auto solve = [&](long long kk) {
        const double h = 1.0 / double(kk);
        const long long n = (long long)std::floor(s_max / h + 1e-9);
        const long long k2 = 2 * kk;
        std::vector<double> p(std::size_t(n + 1), 1.0);
        std::vector<double> integral(std::size_t(n + 1), 0.0);
        for (long long i = 0; i <= std::min(k2, n); ++i)
            integral[std::size_t(i)] = double(i) * h;
        for (long long i = k2 + 1; i <= n; ++i) {
            const double s = double(i) * h;
            // implicit trapezoid: the window integral ends at s itself
            const double known = integral[std::size_t(i - 1)] +
                                 0.5 * h * p[std::size_t(i - 1)] -
                                 integral[std::size_t(i - k2)];
            p[std::size_t(i)] =
                (2.0 / (s + 2.0)) * known / (1.0 - h / (s + 2.0));
            integral[std::size_t(i)] =
                integral[std::size_t(i - 1)] +
                0.5 * h * (p[std::size_t(i - 1)] + p[std::size_t(i)]);
        }
        return p;
    };
    const auto fine = solve(2 * k);
    const auto coarse = solve(k);
    double err = 0.0;
    for (std::size_t i = 0; i < coarse.size(); ++i)
        err = std::max(err, std::abs(fine[2 * i] - coarse[i]));
    RecurrenceTable t;
    t.grid_step = 1.0 / double(2 * k);
    t.max_arg = double(fine.size() - 1) * t.grid_step;
    t.values = fine;
    t.breakpoints = {2.0, 4.0};
    t.est_error = err / 3.0;
    return t;
}

LimitEstimate limit_coefficient_c(double r, SolveParams params) {
    const RecurrenceTable t = solve_gap_expectation(r, params.L_big, params.h);
    const double g_big = t.value_at(params.L_big) / (params.L_big + 2.0);
    const double g_half =
        t.value_at(params.L_big / 2.0) / (params.L_big / 2.0 + 2.0);
    LimitEstimate e;
    e.value = g_big;
    e.at_arg = params.L_big;
    e.residual =
        std::abs(g_big - g_half) + t.est_error / (params.L_big + 2.0);
    return e;
}

std::pair<RecurrenceTable, LimitEstimate> solve_h_and_lambda(
    double r, SolveParams params) {
    if (!(r > 0.0 && r <= 2.0))
        throw std::invalid_argument("solve_h_and_lambda: r must be in (0, 2]");
    const double L_max = params.L_big;
    const long long k = aligned_denominator(params.h, {r, 2.0});
    const auto solve = [&](long long kk) {
        const double h = 1.0 / double(kk);
        const long long n = (long long)std::floor(L_max / h + 1e-9);
        const long long k2 = 2 * kk, k2r = std::llround((2.0 + r) * kk);
        const long long k4 = 4 * kk;
        std::vector<double> f(std::size_t(n + 1), 0.0);
        std::vector<double> integral(std::size_t(n + 1), 0.0);  // from 2
        for (long long i = 0; i <= std::min(k4, n); ++i) {
            const double L = double(i) * h;
            if (i >= k2r) f[std::size_t(i)] = 2.0 / (L - 2.0);
            if (i > k2)
                integral[std::size_t(i)] =
                    (i <= k2r) ? 0.0 : 2.0 * std::log((L - 2.0) / r);
        }
        for (long long i = k4 + 1; i <= n; ++i) {
            const double L = double(i) * h;
            f[std::size_t(i)] =
                2.0 / (L - 2.0) * (1.0 + integral[std::size_t(i - k2)]);
            integral[std::size_t(i)] =
                integral[std::size_t(i - 1)] +
                0.5 * h * (f[std::size_t(i - 1)] + f[std::size_t(i)]);
        }
        return f;
    };
    const auto fine = solve(2 * k);
    const auto coarse = solve(k);
    double err = 0.0;
    for (std::size_t i = 0; i < coarse.size(); ++i)
        err = std::max(err, std::abs(fine[2 * i] - coarse[i]));
    RecurrenceTable t;
    t.grid_step = 1.0 / double(2 * k);
    t.max_arg = double(fine.size() - 1) * t.grid_step;
    t.values = fine;
    t.breakpoints = {2.0, 2.0 + r, 4.0};
    t.est_error = err / 3.0;
    const double l_big = t.value_at(L_max) / (L_max + 2.0);
    const double l_half = t.value_at(L_max / 2.0) / (L_max / 2.0 + 2.0);
    LimitEstimate e;
    e.value = l_big;
    e.at_arg = L_max;
    e.residual = std::abs(l_big - l_half) + t.est_error / (L_max + 2.0);
    return {std::move(t), e};
}

}  // namespace rodpack
