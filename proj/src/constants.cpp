#include "constants.hpp"

#include <cmath>

#include "errors.hpp"

namespace msfdr {

namespace {
void check_level(double q) {
    if (!(q > 0.0 && q < 1.0)) throw Error(Errc::domain, "q must lie in (0,1)");
}

// alpha_i = iq/(m + beta - i(1-q)); denominator >= beta*q > 0 for i <= m.
std::vector<double> ms_family(std::size_t m, double q, double beta) {
    std::vector<double> alphas(m);
    for (std::size_t i = 1; i <= m; ++i) {
        const double di = static_cast<double>(i);
        alphas[i - 1] = di * q / (static_cast<double>(m) + beta - di * (1.0 - q));
    }
    return alphas;
}
}  // namespace

CriticalConstants ms_constants(std::size_t m, double q, double beta) {
    if (m < 1) throw Error(Errc::domain, "m must be >= 1");
    check_level(q);
    if (!(beta >= 1.0)) throw Error(Errc::domain, "beta must be >= 1");
    CriticalConstants c;
    c.alphas = ms_family(m, q, beta);
    c.family = Family::MS;
    c.q = q;
    c.beta = beta;
    return c;
}

CriticalConstants bh_constants(std::size_t m, double q) {
    if (m < 1) throw Error(Errc::domain, "m must be >= 1");
    check_level(q);
    CriticalConstants c;
    c.alphas.resize(m);
    for (std::size_t i = 1; i <= m; ++i)
        c.alphas[i - 1] = static_cast<double>(i) * q / static_cast<double>(m);
    c.family = Family::BH;
    c.q = q;
    return c;
}

CriticalConstants prds_constants(std::size_t m, double q) {
    if (m < 1) throw Error(Errc::domain, "m must be >= 1");
    check_level(q);
    const double beta = static_cast<double>(m) * (1.0 - q);
    CriticalConstants c;
    c.alphas = ms_family(m, q, beta);
    c.alphas[m - 1] = q;  // exact by algebra; pin against roundoff
    c.family = Family::PRDS;
    c.q = q;
    c.beta = beta;
    return c;
}

double theorem1_bound(std::size_t i, std::size_t m, double q) {
    return static_cast<double>(i) * q / static_cast<double>(m + 1 - i);
}

bool check_theorem1_condition(const CriticalConstants& c, double q) {
    const std::size_t m = c.size();
    for (std::size_t i = 1; i <= m; ++i) {
        const double a = c.alphas[i - 1];
        if (a >= 1.0) return false;
        const double odds = a / (1.0 - a);
        const double bound = theorem1_bound(i, m, q);
        if (odds > bound * (1.0 + 1e-12)) return false;
    }
    return true;
}

}  // namespace msfdr
