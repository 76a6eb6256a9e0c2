#ifndef DAK_BENCH_HPP
#define DAK_BENCH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dak/docarray.hpp"
#include "dak/suffix_array.hpp"
#include "dak/text.hpp"

namespace dak {

enum class Method { inplace, isa, rank_plain, rank_sparse };

Method parse_method(std::string_view name);
const char* to_string(Method method) noexcept;
std::vector<Method> all_methods();

// One measured run. Workspace excludes the input buffers (T^cat, the
// suffix array cells) and the DA output; only the compute phase is timed,
// deserialization and verification are not.
struct BenchReport {
    std::string dataset;
    std::uint64_t n = 0;
    std::uint64_t d = 0;
    unsigned sigma = 0;
    std::string method;
    double seconds = 0.0;
    std::uint64_t workspace_bytes = 0;
    bool verified = false;
};

struct ComputeResult {
    DocumentArray da;
    BenchReport report;
    SuffixArray restored;  // in-place method only: the rebuilt suffix array
};

// Computes DA by `method`, timing the compute phase and metering its
// internal allocations. The suffix array is copied into the work array
// (standing in for the input buffer Algorithm 1 consumes) before the clock
// starts; for the in-place method the restored cells are checked against
// `sa` and a mismatch raises errc::malformed_sa.
ComputeResult run_method(Method method, const ConcatText& text, const SuffixArray& sa,
                         std::string dataset);

// `reps` runs per (dataset, method); the median time and maximum workspace
// are reported.
BenchReport bench_method(Method method, const ConcatText& text, const SuffixArray& sa,
                         std::string dataset, unsigned reps);

std::string to_json_line(const BenchReport& report);

// Table 2-shaped Markdown: one row per dataset, time columns then
// workspace columns per method.
std::string markdown_table(std::span<const BenchReport> reports);

std::string human_summary(const BenchReport& report);

} // namespace dak

#endif // DAK_BENCH_HPP
