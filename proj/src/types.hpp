#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace msfdr {

enum class Truth : std::uint8_t { TrueNull, FalseNull };

enum class Family : std::uint8_t { MS, BH, PRDS, Custom };

enum class Procedure : std::uint8_t { BH, TS, MS, STS, ORC, PRDS };

const char* to_string(Procedure p);
const char* to_string(Family f);
bool parse_procedure(const std::string& name, Procedure& out);
bool parse_family(const std::string& name, Family& out);

// Raw p-values with stable hypothesis ids and optional truth labels.
// Invariants: values finite in [0,1]; ids a permutation of 0..m-1;
// truth empty or of length m.
struct PValueVector {
    std::vector<double> values;
    std::vector<std::uint32_t> ids;
    std::vector<Truth> truth;

    std::size_t size() const { return values.size(); }

    // Builds a vector with ids 0..m-1, validating every value.
    static PValueVector from_values(std::vector<double> values);
    static PValueVector from_values(std::vector<double> values, std::vector<Truth> truth);
};

// Nondecreasing rearrangement plus the rank -> id bijection.
struct OrderedPValues {
    std::vector<double> sorted_values;
    std::vector<std::uint32_t> rank_to_id;

    std::size_t size() const { return sorted_values.size(); }
};

// Critical values alpha_1 <= ... <= alpha_m in (0,1) with provenance.
struct CriticalConstants {
    std::vector<double> alphas;
    Family family = Family::Custom;
    double q = 0.0;
    double beta = 1.0;

    std::size_t size() const { return alphas.size(); }
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool valid() const { return violations.empty(); }
};

// Rejected hypotheses. threshold is the largest rejected p-value, 0 if none.
struct RejectionSet {
    std::vector<std::uint32_t> rejected_ids;
    std::size_t k = 0;
    double threshold = 0.0;
};

struct ConfusionCounts {
    std::uint32_t V = 0;   // true nulls rejected
    std::uint32_t S = 0;   // false nulls rejected
    std::uint32_t m0 = 0;  // true nulls
    std::uint32_t m1 = 0;  // false nulls

    std::uint32_t R() const { return V + S; }
};

// Sorts p-values nondecreasing; ties broken by ascending id so the result
// is deterministic. Throws Errc::invalid_pvalue on out-of-range input.
OrderedPValues sort_pvalues(const PValueVector& pv);

// Lists monotonicity and open-interval violations; empty report means valid.
ValidationReport validate_constants(const CriticalConstants& c);

// Tallies rejections against truth labels. Requires pv.truth present.
ConfusionCounts confusion_counts(const PValueVector& pv, const RejectionSet& rs);

}  // namespace msfdr
