#include "exact.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "errors.hpp"
#include "normal.hpp"

namespace msfdr {

namespace {

// k by the literal definition: the largest i whose whole prefix passes.
std::size_t exhaustive_k(std::span<const double> sorted, std::span<const double> alphas) {
    const std::size_t m = sorted.size();
    for (std::size_t i = m; i >= 1; --i) {
        bool prefix_ok = true;
        for (std::size_t j = 1; j <= i; ++j) {
            if (!(sorted[j - 1] <= alphas[j - 1])) {
                prefix_ok = false;
                break;
            }
        }
        if (prefix_ok) return i;
    }
    return 0;
}

}  // namespace

RejectionSet exhaustive_stepdown(const PValueVector& pv, const CriticalConstants& c) {
    if (pv.size() > 16)
        throw Error(Errc::size_guard, "exhaustive_stepdown is limited to m <= 16");
    if (pv.size() != c.size())
        throw Error(Errc::length_mismatch, "p-value and constants lengths differ");
    OrderedPValues ordered = sort_pvalues(pv);
    const std::size_t k = exhaustive_k(ordered.sorted_values, c.alphas);

    RejectionSet rs;
    rs.k = k;
    rs.rejected_ids.assign(ordered.rank_to_id.begin(),
                           ordered.rank_to_id.begin() + static_cast<std::ptrdiff_t>(k));
    rs.threshold = k > 0 ? ordered.sorted_values[k - 1] : 0.0;
    return rs;
}

double AltCdf::operator()(double t) const {
    if (mu == 0.0) return t;
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return normal_sf(normal_quantile(1.0 - t) - mu);
}

double AltCdf::inverse(double u) const {
    if (mu == 0.0) return u;
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return normal_sf(normal_quantile(1.0 - u) + mu);
}

namespace {

// Open (midpoint) adaptive quadrature; never samples segment endpoints, so
// the piece boundaries sitting exactly on the segment ends are harmless.
class OpenAdaptive {
public:
    OpenAdaptive(std::function<double(double)> f, double abs_tol)
        : f_(std::move(f)), abs_tol_(abs_tol) {}

    double integrate(double lo, double hi) {
        if (hi <= lo) return 0.0;
        const double mid = 0.5 * (lo + hi);
        return refine(lo, hi, f_(mid), abs_tol_ * (hi - lo), 0);
    }

private:
    double refine(double lo, double hi, double fmid, double tol, int depth) {
        const double whole = (hi - lo) * fmid;
        const double mid = 0.5 * (lo + hi);
        const double fl = f_(0.5 * (lo + mid));
        const double fr = f_(0.5 * (mid + hi));
        const double left = (mid - lo) * fl;
        const double right = (hi - mid) * fr;
        const double split = left + right;
        if (std::fabs(split - whole) <= tol) return split;
        if (depth >= 48)
            throw Error(Errc::tolerance, "quadrature failed to converge");
        return refine(lo, mid, fl, 0.5 * tol, depth + 1) +
               refine(mid, hi, fr, 0.5 * tol, depth + 1);
    }

    std::function<double(double)> f_;
    double abs_tol_;
};

}  // namespace

double exact_fdr_stepdown(const ExactFdrSpec& spec) {
    const std::size_t m = spec.constants.size();
    if (m > 3)
        throw Error(Errc::size_guard, "exact_fdr_stepdown is limited to m <= 3");
    if (spec.m0 > m)
        throw Error(Errc::domain, "m0 exceeds the number of hypotheses");
    if (m == 0) return 0.0;

    const auto& alphas = spec.constants.alphas;

    // Per-coordinate breakpoints in the uniform coordinate: the critical
    // values themselves for null coordinates, their images under the
    // alternative cdf for false-null coordinates.
    std::vector<std::vector<double>> cuts(m);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<double>& c = cuts[j];
        c.push_back(0.0);
        for (double a : alphas) {
            const double b = j < spec.m0 ? a : spec.alt(a);
            if (b > 0.0 && b < 1.0) c.push_back(b);
        }
        c.push_back(1.0);
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }

    std::array<double, 3> u{};
    std::array<double, 3> p{};

    auto integrand = [&]() {
        for (std::size_t j = 0; j < m; ++j)
            p[j] = j < spec.m0 ? u[j] : spec.alt.inverse(u[j]);
        std::array<std::size_t, 3> order{0, 1, 2};
        std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m),
                  [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });
        std::array<double, 3> sorted{};
        for (std::size_t r = 0; r < m; ++r) sorted[r] = p[order[r]];
        const std::size_t k =
            exhaustive_k(std::span<const double>(sorted.data(), m),
                         std::span<const double>(alphas.data(), m));
        if (k == 0) return 0.0;
        std::size_t v = 0;
        for (std::size_t r = 0; r < k; ++r)
            if (order[r] < spec.m0) ++v;
        return static_cast<double>(v) / static_cast<double>(k);
    };

    // Nested one-dimensional passes, tolerance split evenly across axes.
    const double axis_tol = spec.abs_tol / static_cast<double>(m);
    std::function<double(std::size_t)> integrate_axis = [&](std::size_t d) -> double {
        if (d == m) return integrand();
        OpenAdaptive quad(
            [&](double x) {
                u[d] = x;
                return integrate_axis(d + 1);
            },
            axis_tol);
        double total = 0.0;
        for (std::size_t s = 0; s + 1 < cuts[d].size(); ++s)
            total += quad.integrate(cuts[d][s], cuts[d][s + 1]);
        return total;
    };

    return integrate_axis(0);
}

}  // namespace msfdr
