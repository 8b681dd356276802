#include "types.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "errors.hpp"

namespace msfdr {

const char* to_string(Procedure p) {
    switch (p) {
        case Procedure::BH: return "BH";
        case Procedure::TS: return "TS";
        case Procedure::MS: return "MS";
        case Procedure::STS: return "STS";
        case Procedure::ORC: return "ORC";
        case Procedure::PRDS: return "PRDS";
    }
    return "?";
}

const char* to_string(Family f) {
    switch (f) {
        case Family::MS: return "ms";
        case Family::BH: return "bh";
        case Family::PRDS: return "prds";
        case Family::Custom: return "custom";
    }
    return "?";
}

bool parse_procedure(const std::string& name, Procedure& out) {
    std::string u;
    u.reserve(name.size());
    for (char ch : name) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    if (u == "BH") out = Procedure::BH;
    else if (u == "TS") out = Procedure::TS;
    else if (u == "MS") out = Procedure::MS;
    else if (u == "STS") out = Procedure::STS;
    else if (u == "ORC") out = Procedure::ORC;
    else if (u == "PRDS") out = Procedure::PRDS;
    else return false;
    return true;
}

bool parse_family(const std::string& name, Family& out) {
    std::string l;
    l.reserve(name.size());
    for (char ch : name) l.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (l == "ms") out = Family::MS;
    else if (l == "bh") out = Family::BH;
    else if (l == "prds") out = Family::PRDS;
    else if (l == "custom") out = Family::Custom;
    else return false;
    return true;
}

namespace {
void check_pvalue(double v, std::size_t index) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
        throw Error(Errc::invalid_pvalue,
                    "p-value at index " + std::to_string(index) + " not in [0,1]");
    }
}
}  // namespace

PValueVector PValueVector::from_values(std::vector<double> values) {
    PValueVector pv;
    pv.ids.resize(values.size());
    std::iota(pv.ids.begin(), pv.ids.end(), 0u);
    for (std::size_t i = 0; i < values.size(); ++i) check_pvalue(values[i], i);
    pv.values = std::move(values);
    return pv;
}

PValueVector PValueVector::from_values(std::vector<double> values, std::vector<Truth> truth) {
    if (!truth.empty() && truth.size() != values.size())
        throw Error(Errc::length_mismatch, "truth labels length differs from values");
    PValueVector pv = from_values(std::move(values));
    pv.truth = std::move(truth);
    return pv;
}

OrderedPValues sort_pvalues(const PValueVector& pv) {
    const std::size_t m = pv.size();
    if (pv.ids.size() != m)
        throw Error(Errc::length_mismatch, "ids length differs from values");
    for (std::size_t i = 0; i < m; ++i) check_pvalue(pv.values[i], i);

    std::vector<std::uint32_t> order(m);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (pv.values[a] != pv.values[b]) return pv.values[a] < pv.values[b];
        return pv.ids[a] < pv.ids[b];
    });

    OrderedPValues out;
    out.sorted_values.resize(m);
    out.rank_to_id.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
        out.sorted_values[r] = pv.values[order[r]];
        out.rank_to_id[r] = pv.ids[order[r]];
    }
    return out;
}

ValidationReport validate_constants(const CriticalConstants& c) {
    ValidationReport report;
    const std::size_t m = c.size();
    for (std::size_t i = 0; i < m; ++i) {
        const double a = c.alphas[i];
        if (!std::isfinite(a) || a <= 0.0 || a >= 1.0) {
            report.violations.push_back("alpha_" + std::to_string(i + 1) + " not in (0,1)");
        }
    }
    for (std::size_t i = 1; i < m; ++i) {
        if (c.alphas[i] < c.alphas[i - 1]) {
            report.violations.push_back("not nondecreasing at index " + std::to_string(i + 1));
        }
    }
    return report;
}

ConfusionCounts confusion_counts(const PValueVector& pv, const RejectionSet& rs) {
    if (pv.truth.size() != pv.size())
        throw Error(Errc::length_mismatch, "confusion_counts requires truth labels");
    ConfusionCounts cc;
    for (Truth t : pv.truth) {
        if (t == Truth::TrueNull) ++cc.m0;
        else ++cc.m1;
    }
    // truth is positional; map ids back to positions
    std::vector<std::uint32_t> pos_of_id(pv.size());
    for (std::size_t i = 0; i < pv.size(); ++i) pos_of_id[pv.ids[i]] = static_cast<std::uint32_t>(i);
    for (std::uint32_t id : rs.rejected_ids) {
        if (pv.truth[pos_of_id[id]] == Truth::TrueNull) ++cc.V;
        else ++cc.S;
    }
    return cc;
}

}  // namespace msfdr
