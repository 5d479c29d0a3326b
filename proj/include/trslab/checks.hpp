#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trslab/codes.hpp"
#include "trslab/report.hpp"

namespace trslab {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// One parameter point of a check. Unset fields select the check's sweep:
/// all admissible k or r, and all nonzero theta for q <= 16, otherwise a
/// fixed sample of 8.
struct CheckPoint {
    std::string field{};
    std::optional<std::size_t> k{};
    std::optional<std::uint32_t> theta{};
    std::optional<std::size_t> r{};
    std::optional<std::size_t> s{};
    /// Tuple length for witness searches.
    std::optional<std::size_t> n{};
    /// Number of random non-full evaluation sets.
    std::size_t sets = 0;
    /// Random trials or sample size; 0 picks the check's default.
    std::size_t trials = 0;
    bool exhaustive = false;
    std::uint64_t seed = 1;
};

struct RunOptions {
    Budget budget = Budget::from_env();
    /// Wall-clock cap per check, applied as a budget deadline.
    std::optional<double> max_seconds;
    unsigned jobs = 1;
};

using CheckFn = VerificationReport (*)(const CheckPoint&, const RunOptions&);

struct CheckInfo {
    std::string_view id;
    std::string_view group;
    std::string_view summary;
    CheckFn run;
    std::vector<CheckPoint> (*grid)();
};

/// Sorted by id.
const std::vector<CheckInfo>& registry();
const CheckInfo* find_check(std::string_view id);

/// Shell-style glob against the id or "group.id".
bool check_matches(const CheckInfo& info, std::string_view filter);

/// Runs one point. BudgetExceeded becomes SKIPPED and an unexpected
/// Falsification becomes FAIL; wall time and version land in metadata.
/// Throws std::invalid_argument for an unknown id or a malformed point.
VerificationReport run_check(std::string_view id, const CheckPoint& point, const RunOptions& options = {});

/// Every default grid point of every check matching filter, run in a pool of
/// options.jobs workers and returned sorted by check id, grid order kept.
std::vector<VerificationReport> run_suite(std::string_view filter, const RunOptions& options = {});

/// 0 when every report is PASS, SKIPPED or OUTSIDE-PROVED-RANGE, else 1.
int exit_code(const std::vector<VerificationReport>& reports);

}  // namespace trslab
