#include "dak/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"

#include "dak/rank_bitvector.hpp"
#include "dak/workspace.hpp"

namespace dak {

Method parse_method(std::string_view name) {
    if (name == "inplace") return Method::inplace;
    if (name == "isa") return Method::isa;
    if (name == "rank-plain") return Method::rank_plain;
    if (name == "rank-sparse") return Method::rank_sparse;
    throw error(errc::parse_error, "unknown method '" + std::string(name) + "'");
}

const char* to_string(Method method) noexcept {
    switch (method) {
        case Method::inplace: return "inplace";
        case Method::isa: return "isa";
        case Method::rank_plain: return "rank-plain";
        case Method::rank_sparse: return "rank-sparse";
    }
    return "?";
}

std::vector<Method> all_methods() {
    return {Method::inplace, Method::isa, Method::rank_plain, Method::rank_sparse};
}

ComputeResult run_method(Method method, const ConcatText& text, const SuffixArray& sa,
                         std::string dataset) {
    BenchReport report;
    report.dataset = std::move(dataset);
    report.n = text.size();
    report.d = text.doc_count();
    report.sigma = text.sigma();
    report.method = to_string(method);

    // Input prep outside the measured region: Algorithm 1 receives T^cat,
    // SA and the count table; the work-array copy stands in for the input
    // SA buffer it consumes.
    const CountTable counts(text);
    WorkArray work{method == Method::inplace ? SuffixArray{sa.entries} : SuffixArray{}};

    auto& meter = WorkspaceMeter::instance();
    meter.reset();
    meter.note_exclusion("input T^cat", text.size());
    meter.note_exclusion("input SA", sa.size() * sizeof(pos_type));
    meter.note_exclusion("output DA", sa.size() * sizeof(std::uint32_t));

    DocumentArray da;
    SuffixArray restored;
    const auto start = std::chrono::steady_clock::now();
    switch (method) {
        case Method::inplace: {
            InplaceResult result = da_inplace(std::move(work), text, counts);
            da = std::move(result.da);
            restored = std::move(result.work).release_suffix_array();
            break;
        }
        case Method::isa:
            da = da_via_isa(sa, text);
            break;
        case Method::rank_plain:
        case Method::rank_sparse: {
            const RankBitvector bits = separator_bitvector(
                text, method == Method::rank_plain ? RankBackend::plain : RankBackend::sparse);
            da = da_via_rank(sa, bits);
            break;
        }
    }
    const auto stop = std::chrono::steady_clock::now();

    if (method == Method::inplace && restored.entries != sa.entries)
        throw error(errc::malformed_sa,
                    "work array differs from the input suffix array after the in-place run");

    report.seconds = std::chrono::duration<double>(stop - start).count();
    report.workspace_bytes = meter.peak_bytes();
    report.verified = verify_da(da, sa, text).ok;
    return {std::move(da), std::move(report), std::move(restored)};
}

BenchReport bench_method(Method method, const ConcatText& text, const SuffixArray& sa,
                         std::string dataset, unsigned reps) {
    reps = std::max(1u, reps);
    std::vector<double> times;
    times.reserve(reps);
    BenchReport report;
    for (unsigned r = 0; r < reps; ++r) {
        ComputeResult result = run_method(method, text, sa, dataset);
        times.push_back(result.report.seconds);
        if (r == 0)
            report = std::move(result.report);
        else {
            report.workspace_bytes = std::max(report.workspace_bytes, result.report.workspace_bytes);
            report.verified = report.verified && result.report.verified;
        }
    }
    std::sort(times.begin(), times.end());
    report.seconds = times[times.size() / 2];
    return report;
}

std::string to_json_line(const BenchReport& report) {
    nlohmann::json j{{"dataset", report.dataset},
                     {"n", report.n},
                     {"d", report.d},
                     {"sigma", report.sigma},
                     {"method", report.method},
                     {"time_s", report.seconds},
                     {"workspace_bytes", report.workspace_bytes},
                     {"verified", report.verified}};
    return j.dump();
}

std::string markdown_table(std::span<const BenchReport> reports) {
    std::vector<std::string> methods;
    std::vector<std::string> datasets;
    std::map<std::pair<std::string, std::string>, const BenchReport*> cell;
    for (const BenchReport& r : reports) {
        if (std::find(methods.begin(), methods.end(), r.method) == methods.end())
            methods.push_back(r.method);
        if (std::find(datasets.begin(), datasets.end(), r.dataset) == datasets.end())
            datasets.push_back(r.dataset);
        cell[{r.dataset, r.method}] = &r;
    }

    std::ostringstream out;
    out << "| Dataset | N | d |";
    for (const auto& m : methods) out << " Time " << m << " (s) |";
    for (const auto& m : methods) out << " Workspace " << m << " (B) |";
    out << "\n|---|---|---|";
    for (std::size_t i = 0; i < 2 * methods.size(); ++i) out << "---|";
    out << "\n";
    for (const auto& ds : datasets) {
        const BenchReport* any = nullptr;
        for (const auto& m : methods)
            if (auto it = cell.find({ds, m}); it != cell.end()) any = it->second;
        out << "| " << ds << " | " << (any ? any->n : 0) << " | " << (any ? any->d : 0) << " |";
        for (const auto& m : methods) {
            auto it = cell.find({ds, m});
            if (it == cell.end())
                out << " - |";
            else {
                char buf[32];
                std::snprintf(buf, sizeof buf, " %.4f |", it->second->seconds);
                out << buf;
            }
        }
        for (const auto& m : methods) {
            auto it = cell.find({ds, m});
            if (it == cell.end())
                out << " - |";
            else
                out << " " << it->second->workspace_bytes << " |";
        }
        out << "\n";
    }
    return out.str();
}

std::string human_summary(const BenchReport& report) {
    std::ostringstream out;
    out << report.dataset << "  method=" << report.method << "  N=" << report.n
        << "  d=" << report.d << "  sigma=" << report.sigma << "  time=" << report.seconds
        << "s  workspace=" << report.workspace_bytes << "B  verified="
        << (report.verified ? "yes" : "no");
    return out.str();
}

} // namespace dak
