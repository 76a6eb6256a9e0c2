// dak - document array toolkit
//
// build    ingest a collection, write T^cat + suffix array + sidecar
// compute  compute the document array by one method, with time/workspace
// bench    run methods x datasets, emit a Markdown table and JSON lines
// verify   check a DA file against the definitional oracle
// bwt      dump the BWT of an indexed collection (debugging aid)

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dak/bench.hpp"
#include "dak/bwt_lf.hpp"
#include "dak/docarray.hpp"
#include "dak/formats.hpp"
#include "dak/serialize.hpp"
#include "dak/suffix_array.hpp"
#include "dak/text.hpp"
#include "dak/workspace.hpp"

namespace fs = std::filesystem;

namespace {

struct Index {
    dak::ConcatText text;
    dak::SuffixArray sa;
    std::string name;
};

fs::path text_path(const fs::path& dir) { return dir / "text.cat"; }
fs::path sa_path(const fs::path& dir) { return dir / "sa.bin"; }
fs::path meta_path(const fs::path& dir) { return dir / "meta.json"; }

Index load_index(const fs::path& dir) {
    Index index{dak::load_raw_text(text_path(dir)), {}, dir.filename().string()};
    std::uint64_t d = 0;
    index.sa = dak::load_suffix_array(sa_path(dir), d);
    if (index.sa.size() != index.text.size())
        throw dak::error(dak::errc::corrupt_file,
                         "suffix array holds " + std::to_string(index.sa.size()) +
                             " entries but the text has " + std::to_string(index.text.size()));
    if (d != index.text.doc_count())
        throw dak::error(dak::errc::corrupt_file,
                         "suffix array header declares d=" + std::to_string(d) +
                             ", text has d=" + std::to_string(index.text.doc_count()));
    if (std::ifstream meta(meta_path(dir)); meta) {
        nlohmann::json j;
        meta >> j;
        if (j.contains("name")) index.name = j["name"].get<std::string>();
    }
    return index;
}

int cmd_build(const std::string& format_name, const fs::path& input, const fs::path& outdir) {
    const dak::InputFormat format = dak::parse_input_format(format_name);
    const dak::ConcatText text = dak::load_collection(input, format);
    const dak::SuffixArray sa = dak::suffix_sort(text);

    fs::create_directories(outdir);
    dak::save_raw_text(text_path(outdir), text);
    dak::save_suffix_array(sa_path(outdir), sa, text.doc_count());

    char digest[32];
    std::snprintf(digest, sizeof digest, "%016llx",
                  static_cast<unsigned long long>(dak::boundaries_digest(text)));
    nlohmann::json meta{{"name", input.stem().string()},
                        {"format", format_name},
                        {"n", text.size()},
                        {"d", text.doc_count()},
                        {"sigma", text.sigma()},
                        {"sa_width", sa.width_bytes()},
                        {"boundaries_digest", digest}};
    dak::write_file(meta_path(outdir), meta.dump(2) + "\n");

    std::cout << "indexed " << input.string() << " -> " << outdir.string() << "  N=" << text.size()
              << " d=" << text.doc_count() << " sigma=" << text.sigma() << "\n";
    return 0;
}

int cmd_compute(const fs::path& dir, const std::string& method_name, const fs::path& out) {
    const dak::Method method = dak::parse_method(method_name);
    const Index index = load_index(dir);

    dak::ComputeResult result = dak::run_method(method, index.text, index.sa, index.name);
    dak::save_document_array(out, result.da, index.text.doc_count());

    if (method == dak::Method::inplace) {
        // file-level restoration check: re-serialize the rebuilt SA and
        // compare it to the index file byte for byte
        std::ostringstream rebuilt;
        dak::write_suffix_array(rebuilt, result.restored, index.text.doc_count());
        if (rebuilt.str() != dak::read_file(sa_path(dir)))
            throw dak::error(dak::errc::malformed_sa,
                             "restored suffix array is not byte-identical to " +
                                 sa_path(dir).string());
        std::cout << "restoration check: suffix array rebuilt byte-identical\n";
    }

    std::cout << dak::human_summary(result.report) << "\n";
    for (const auto& ex : dak::WorkspaceMeter::instance().exclusions())
        std::cout << "  excluded " << ex.name << ": " << ex.bytes << " B\n";
    std::cout << dak::to_json_line(result.report) << "\n";
    return result.report.verified ? 0 : 1;
}

int cmd_bench(const std::vector<std::string>& dirs, const std::string& methods_csv, unsigned reps,
              const fs::path& json_out) {
    std::vector<dak::Method> methods;
    if (methods_csv.empty() || methods_csv == "all")
        methods = dak::all_methods();
    else {
        std::stringstream ss(methods_csv);
        for (std::string tok; std::getline(ss, tok, ',');)
            methods.push_back(dak::parse_method(tok));
    }

    std::vector<dak::BenchReport> reports;
    for (const std::string& dir : dirs) {
        const Index index = load_index(dir);
        for (dak::Method m : methods) {
            reports.push_back(dak::bench_method(m, index.text, index.sa, index.name, reps));
            std::cerr << dak::human_summary(reports.back()) << "\n";
        }
    }

    std::cout << dak::markdown_table(reports);
    if (!json_out.empty()) {
        std::string lines;
        for (const auto& r : reports) lines += dak::to_json_line(r) + "\n";
        dak::write_file(json_out, lines);
    }
    bool all_ok = true;
    for (const auto& r : reports) all_ok = all_ok && r.verified;
    return all_ok ? 0 : 1;
}

int cmd_verify(const fs::path& dir, const fs::path& da_file) {
    const Index index = load_index(dir);
    std::uint64_t d = 0;
    const dak::DocumentArray da = dak::load_document_array(da_file, d);
    if (da.size() != index.text.size())
        throw dak::error(dak::errc::length_mismatch,
                         "document array holds " + std::to_string(da.size()) +
                             " entries, expected " + std::to_string(index.text.size()));

    const dak::VerifyReport report = dak::verify_da(da, index.sa, index.text);
    if (!report.ok) {
        std::cout << "FAIL: first mismatch at index " << *report.first_mismatch << " (DA value "
                  << da.at(*report.first_mismatch) << ", oracle "
                  << index.text.document_of(index.sa.at(*report.first_mismatch)) << ")\n";
        return 1;
    }
    std::cout << "OK: " << report.checked << " entries match the oracle\n";
    std::cout << "histogram (top documents):";
    const std::size_t shown = std::min<std::size_t>(report.histogram.size(), 8);
    for (std::size_t j = 1; j <= shown; ++j)
        std::cout << " " << j << ":" << report.histogram[j - 1];
    if (report.histogram.size() > shown) std::cout << " ...";
    std::cout << "\n";
    return 0;
}

int cmd_bwt(const fs::path& dir, const fs::path& out) {
    const Index index = load_index(dir);
    dak::WorkArray work{dak::SuffixArray{index.sa.entries}};
    dak::bwt_in_place(work, index.text);
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f) throw dak::error(dak::errc::io_error, "cannot create " + out.string());
    for (dak::pos_type cell : work.cells()) f.put(static_cast<char>(cell));
    std::cout << "wrote " << work.size() << " BWT bytes to " << out.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"document array construction and benchmarking"};
    app.require_subcommand(1);

    std::string format = "lines", method = "inplace", methods_csv = "all";
    std::string input, out, da_file;
    std::vector<std::string> index_dirs;
    std::string index_dir;
    unsigned reps = 5;
    std::string json_out;

    auto* build = app.add_subcommand("build", "ingest a collection and build its index");
    build->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"lines", "fasta", "raw"}));
    build->add_option("--in", input, "input file")->required();
    build->add_option("--out", out, "output index directory")->required();

    auto* compute = app.add_subcommand("compute", "compute the document array");
    compute->add_option("--index", index_dir, "index directory")->required();
    compute->add_option("--method", method, "inplace|isa|rank-plain|rank-sparse")
        ->check(CLI::IsMember({"inplace", "isa", "rank-plain", "rank-sparse"}));
    compute->add_option("--out", da_file, "document array output file")->required();

    auto* bench = app.add_subcommand("bench", "benchmark methods across datasets");
    bench->add_option("--index", index_dirs, "index directories")->required()->expected(-1);
    bench->add_option("--methods", methods_csv, "comma-separated methods, or 'all'");
    bench->add_option("--reps", reps, "repetitions per (dataset, method)");
    bench->add_option("--json", json_out, "JSON-lines output file");

    auto* verify = app.add_subcommand("verify", "verify a document array against the oracle");
    verify->add_option("--index", index_dir, "index directory")->required();
    verify->add_option("--da", da_file, "document array file")->required();

    auto* bwt = app.add_subcommand("bwt", "dump the BWT as a raw byte file");
    bwt->add_option("--index", index_dir, "index directory")->required();
    bwt->add_option("--out", out, "output file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(format, input, out);
        if (compute->parsed()) return cmd_compute(index_dir, method, da_file);
        if (bench->parsed()) return cmd_bench(index_dirs, methods_csv, reps, json_out);
        if (verify->parsed()) return cmd_verify(index_dir, da_file);
        if (bwt->parsed()) return cmd_bwt(index_dir, out);
    } catch (const dak::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
