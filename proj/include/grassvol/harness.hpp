#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grassvol/complexmat.hpp"
#include "grassvol/rng.hpp"

namespace grassvol {

struct VerificationRecord {
    std::string check_id;
    std::string paper_anchor;  // equation reference or "plumbing"
    bool pass = false;
    double max_error = 0.0;
    double runtime_ms = 0.0;
    std::optional<std::uint64_t> seed;
};

/// Knobs shared by every check. `timings` is off by default so that two runs
/// with the same seed produce byte-identical reports.
struct HarnessConfig {
    std::uint64_t seed = 42;
    double tol = 1e-9;
    unsigned workers = 1;
    std::uint64_t mc_samples = 1'000'000;
    std::uint64_t loop_steps = 10'000;
    bool timings = false;
};

/// Parse a flat key=value config file ('#' comments, blank lines ignored).
/// Unknown keys are rejected.
HarnessConfig parse_config_text(const std::string& text, HarnessConfig base = {});
HarnessConfig load_config_file(const std::string& path, HarnessConfig base = {});

/// All registered check ids, sorted.
std::vector<std::string> all_check_ids();

/// Check ids beginning with the given prefix (e.g. a module name), sorted.
std::vector<std::string> check_ids_with_prefix(const std::string& prefix);

/// Run the selected checks (concurrently up to config.workers) and return
/// records sorted by check_id. Throws std::invalid_argument on an unknown id
/// or an empty selection.
std::vector<VerificationRecord> run_suite(const std::vector<std::string>& selection,
                                          const HarnessConfig& config);

enum class ReportFormat { json, csv };

/// Stable field ordering, bit-identical output for identical records.
std::string format_report(const std::vector<VerificationRecord>& records,
                          ReportFormat format);
void emit_report(const std::vector<VerificationRecord>& records, ReportFormat format,
                 const std::string& path);

/// Parse a JSON report back into records (round-trip of format_report).
std::vector<VerificationRecord> parse_report_json(const std::string& text);

/// Deterministic pseudo-random test matrices.
ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, CounterRng& rng);
ComplexMatrix random_hermitian(std::size_t n, CounterRng& rng);
ComplexMatrix random_unitary(std::size_t n, CounterRng& rng);

}  // namespace grassvol
