#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>

#include "dak/serialize.hpp"
#include "dak/suffix_array.hpp"
#include "test_util.hpp"

using namespace dak;
using dak::testing::error_code_of;

namespace {

std::string serialize_sa(const SuffixArray& sa, std::uint64_t d) {
    std::ostringstream out;
    write_suffix_array(out, sa, d);
    return out.str();
}

} // namespace

TEST_CASE("suffix array round-trip with header fields") {
    const ConcatText ct = ConcatText::from_documents({"ab", "a"});
    const SuffixArray sa = suffix_sort(ct);
    const std::string bytes = serialize_sa(sa, ct.doc_count());

    CHECK(bytes.size() == kHeaderBytes + sa.size() * 4);
    CHECK(bytes.substr(0, 4) == "DSAK");
    CHECK(bytes[4] == 1);  // version
    CHECK(bytes[5] == 4);  // width
    CHECK(static_cast<unsigned char>(bytes[8]) == 6);   // N low byte
    CHECK(static_cast<unsigned char>(bytes[16]) == 2);  // d low byte

    std::istringstream in(bytes);
    std::uint64_t d = 0;
    const SuffixArray back = read_suffix_array(in, d);
    CHECK(back.entries == sa.entries);
    CHECK(d == 2);
}

TEST_CASE("document array files use the DDAK magic and 4-byte entries") {
    DocumentArray da;
    da.entries = {3, 1, 2, 2, 1, 1};
    std::ostringstream out;
    write_document_array(out, da, 2);
    const std::string bytes = out.str();
    CHECK(bytes.substr(0, 4) == "DDAK");
    CHECK(bytes[5] == 4);

    std::istringstream in(bytes);
    std::uint64_t d = 0;
    CHECK(read_document_array(in, d).entries == da.entries);
    CHECK(d == 2);
}

TEST_CASE("readers reject corrupt headers and truncated payloads") {
    const ConcatText ct = ConcatText::from_documents({"ab", "a"});
    const SuffixArray sa = suffix_sort(ct);
    std::string bytes = serialize_sa(sa, 2);
    std::uint64_t d = 0;

    {
        std::string bad = bytes;
        bad[0] = 'X';
        std::istringstream in(bad);
        CHECK(error_code_of([&] { read_suffix_array(in, d); }) == errc::corrupt_file);
    }
    {
        std::string bad = bytes;
        bad[4] = 9;  // version
        std::istringstream in(bad);
        CHECK(error_code_of([&] { read_suffix_array(in, d); }) == errc::corrupt_file);
    }
    {
        std::string bad = bytes;
        bad[5] = 3;  // width
        std::istringstream in(bad);
        CHECK(error_code_of([&] { read_suffix_array(in, d); }) == errc::corrupt_file);
    }
    {
        std::istringstream in(bytes.substr(0, bytes.size() - 2));  // truncated payload
        const auto code = error_code_of([&] { read_suffix_array(in, d); });
        CHECK(code == errc::corrupt_file);
    }
    {
        std::istringstream in(bytes + "zz");  // trailing garbage
        CHECK(error_code_of([&] { read_suffix_array(in, d); }) == errc::corrupt_file);
    }
    {
        // DA reader refuses SA files
        std::istringstream in(bytes);
        CHECK(error_code_of([&] { read_document_array(in, d); }) == errc::corrupt_file);
    }
}

TEST_CASE("truncated document array names expected and actual length") {
    DocumentArray da;
    da.entries = {2, 1, 1};
    std::ostringstream out;
    write_document_array(out, da, 1);
    const std::string bytes = out.str();
    std::istringstream in(bytes.substr(0, bytes.size() - 4));
    std::uint64_t d = 0;
    try {
        read_document_array(in, d);
        FAIL("expected an error");
    } catch (const error& e) {
        CHECK(e.code() == errc::corrupt_file);
        CHECK(std::string(e.what()).find("12") != std::string::npos);  // expected payload
        CHECK(std::string(e.what()).find("8") != std::string::npos);   // actual payload
    }
}

TEST_CASE("width-8 payloads load when entries fit 32 bits") {
    // hand-build a width-8 file for SA [3,2,1], d=1
    std::string bytes = "DSAK";
    bytes.push_back(1);
    bytes.push_back(8);
    bytes.append(2, '\0');
    auto put64 = [&](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    };
    put64(3);  // N
    put64(1);  // d
    for (std::uint64_t v : {3, 2, 1}) put64(v);

    std::istringstream in(bytes);
    std::uint64_t d = 0;
    const SuffixArray sa = read_suffix_array(in, d);
    CHECK(sa.entries == std::vector<pos_type>{3, 2, 1});
    CHECK(d == 1);
}

TEST_CASE("byte-identical serialization across runs") {
    std::mt19937_64 rng(59);
    const auto docs = dak::testing::random_collection(rng, 26, 12, 2000);
    const ConcatText ct = ConcatText::from_documents(docs);
    const std::string first = serialize_sa(suffix_sort(ct), ct.doc_count());
    const std::string second = serialize_sa(suffix_sort(ct), ct.doc_count());
    CHECK(first == second);
}

TEST_CASE("file round-trip through a temp directory") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "dak_serialize_test";
    fs::create_directories(dir);

    const ConcatText ct = ConcatText::from_documents({"hello", "world", ""});
    const SuffixArray sa = suffix_sort(ct);

    save_raw_text(dir / "text.cat", ct);
    save_suffix_array(dir / "sa.bin", sa, ct.doc_count());

    const ConcatText ct2 = load_raw_text(dir / "text.cat");
    CHECK(ct2.bytes() == ct.bytes());
    std::uint64_t d = 0;
    CHECK(load_suffix_array(dir / "sa.bin", d).entries == sa.entries);
    CHECK(d == 3);

    CHECK(error_code_of([&] { load_raw_text(dir / "missing.cat"); }) == errc::io_error);
    fs::remove_all(dir);
}

TEST_CASE("boundaries digest distinguishes collections") {
    const ConcatText a = ConcatText::from_documents({"ab", "a"});
    const ConcatText b = ConcatText::from_documents({"a", "ab"});
    CHECK(boundaries_digest(a) != boundaries_digest(b));
    CHECK(boundaries_digest(a) == boundaries_digest(ConcatText::from_documents({"xy", "z"})));
}
