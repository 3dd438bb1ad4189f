#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyperalg/cd_core.hpp"

namespace hyperalg::cd {

using RationalElement = Element<Rational>;

struct ExhaustiveBasis {};
struct RandomSample {
    std::size_t count = 1000;
    std::uint64_t seed = 0;
};

enum class SampleKind { ExhaustiveBasis, RandomSample };

/// Verdict for one identity. A failed verdict carries the arguments that
/// violate it, in the identity's argument order.
struct IdentityVerdict {
    std::string name;
    bool passed = true;
    std::size_t checks = 0;
    std::vector<RationalElement> witness;
};

struct PropertyReport {
    int level = 0;
    SampleKind kind = SampleKind::ExhaustiveBasis;
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;
    std::vector<IdentityVerdict> verdicts;

    const IdentityVerdict& verdict(const std::string& name) const;
    bool passed(const std::string& name) const { return verdict(name).passed; }
};

/// Names of the identities in a PropertyReport, in report order.
const std::vector<std::string>& identity_names();

/// Re-evaluates a named identity on explicit arguments; true when it holds.
bool identity_holds(const std::string& name, const std::vector<RationalElement>& args);

struct BatteryOptions {
    int max_level = kDefaultMaxLevel;
    int max_exhaustive_level = 5;
    unsigned threads = 1;
};

/// Exhaustive mode: trilinear identities on basis triples, identities that
/// are quadratic in a repeated argument on basis elements and all signed sums
/// e_i +/- e_j (a complete check by polarization). Random mode: coefficient
/// vectors with entries in [-3, 3].
PropertyReport identity_battery(int level, ExhaustiveBasis, const BatteryOptions& opts = {});
PropertyReport identity_battery(int level, RandomSample sample, const BatteryOptions& opts = {});

struct TwoTermSigned {};

/// Pairs (a, b) of nonzero candidates with a b = 0, ordered lexicographically
/// by candidate position (for two-term candidates: by (i, j, sign_i, sign_j)).
std::vector<std::pair<RationalElement, RationalElement>> find_zero_divisors(
    int level, TwoTermSigned, unsigned threads = 1, int max_level = 6);
std::vector<std::pair<RationalElement, RationalElement>> find_zero_divisors(
    int level, const std::vector<RationalElement>& candidates, unsigned threads = 1,
    int max_level = kDefaultMaxLevel);

/// Candidate list +/-e_i +/-e_j, 1 <= i < j < 2^r, in search order.
std::vector<RationalElement> two_term_signed_candidates(int level);

}  // namespace hyperalg::cd
