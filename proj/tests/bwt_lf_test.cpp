#include "doctest.h"

#include <random>

#include "dak/bwt_lf.hpp"
#include "dak/suffix_array.hpp"
#include "dak/text.hpp"
#include "test_util.hpp"

using namespace dak;
using dak::testing::error_code_of;

namespace {

std::vector<pos_type> codes(std::string_view symbols) {
    std::vector<pos_type> out;
    for (char ch : symbols)
        out.push_back(ch == '#' ? kSentinelHash : ch == '$' ? kSentinelDollar
                                                            : static_cast<std::uint8_t>(ch));
    return out;
}

std::vector<std::uint8_t> work_bytes(const WorkArray& work) {
    return {work.cells().begin(), work.cells().end()};
}

} // namespace

TEST_CASE("bwt of the worked example") {
    const ConcatText ct = ConcatText::from_documents({"ab", "a"});
    WorkArray work{suffix_sort(ct)};
    bwt_in_place(work, ct);
    CHECK(work.phase() == WorkArray::Phase::bwt);
    CHECK(std::vector<pos_type>(work.cells().begin(), work.cells().end()) == codes("$ba$#a"));
}

TEST_CASE("bwt wraps SA[i]=1 to the terminator") {
    const ConcatText ct = ConcatText::from_documents({"x"});
    WorkArray work{suffix_sort(ct)};  // SA = [3,2,1]
    bwt_in_place(work, ct);
    CHECK(std::vector<pos_type>(work.cells().begin(), work.cells().end()) == codes("$x#"));
}

TEST_CASE("phase discipline") {
    const ConcatText ct = ConcatText::from_documents({"ab", "a"});
    WorkArray work{suffix_sort(ct)};
    bwt_in_place(work, ct);
    CHECK(error_code_of([&] { bwt_in_place(work, ct); }) == errc::wrong_phase);
    const CountTable counts(ct);
    lf_counting_in_place(work, counts);
    CHECK(error_code_of([&] { lf_counting_in_place(work, counts); }) == errc::wrong_phase);
    CHECK(work.phase() == WorkArray::Phase::lf);
    CHECK(error_code_of([&] { std::move(work).release_suffix_array(); }) == errc::wrong_phase);
}

TEST_CASE("counting pass of the worked example") {
    const ConcatText ct = ConcatText::from_documents({"ab", "a"});
    WorkArray work{suffix_sort(ct)};
    bwt_in_place(work, ct);
    lf_counting_in_place(work, CountTable(ct));
    CHECK(std::vector<pos_type>(work.cells().begin(), work.cells().end()) ==
          std::vector<pos_type>{2, 6, 4, 3, 1, 5});
}

TEST_CASE("counting pass over injected cells") {
    // literal BWT cells "$#x" with C(#)=0, C($)=1, C(x)=2
    const ConcatText ct = ConcatText::from_documents({"x"});
    WorkArray work{codes("$#x"), WorkArray::Phase::bwt};
    lf_counting_in_place(work, CountTable(ct));
    CHECK(std::vector<pos_type>(work.cells().begin(), work.cells().end()) ==
          std::vector<pos_type>{2, 1, 3});
}

TEST_CASE("exact LF of the worked examples") {
    const ConcatText ct = ConcatText::from_documents({"ab", "a"});
    const SuffixArray sa = suffix_sort(ct);
    const InversePermutation isa = inverse(sa);
    CHECK(lf_exact(sa, isa) == std::vector<pos_type>{3, 6, 4, 2, 1, 5});

    const ConcatText single = ConcatText::from_documents({"x"});
    const SuffixArray sa2 = suffix_sort(single);
    CHECK(lf_exact(sa2, inverse(sa2)) == std::vector<pos_type>{2, 3, 1});

    SuffixArray short_sa;
    short_sa.entries = {1};
    CHECK(error_code_of([&] { lf_exact(sa, inverse(short_sa)); }) == errc::length_mismatch);
}

TEST_CASE("exact LF satisfies sa[LF[i]] = sa[i]-1 mod N") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 30; ++round) {
        const auto docs = dak::testing::random_collection(rng, 4, 1 + rng() % 6, 300);
        const ConcatText ct = ConcatText::from_documents(docs);
        const SuffixArray sa = suffix_sort(ct);
        const auto lf = lf_exact(sa, inverse(sa));
        const pos_type n = ct.size();
        for (pos_type i = 1; i <= n; ++i) {
            CHECK(sa.at(lf[i - 1]) == (sa.at(i) + n - 2) % n + 1);
            if (sa.at(i) == 1) CHECK(lf[i - 1] == 1);  // wrap hits the # suffix
        }
    }
}

TEST_CASE("counting LF equals exact LF away from separators") {
    std::mt19937_64 rng(29);
    for (int round = 0; round < 30; ++round) {
        const auto docs = dak::testing::random_collection(rng, 26, 1 + rng() % 10, 400);
        const ConcatText ct = ConcatText::from_documents(docs);
        const SuffixArray sa = suffix_sort(ct);
        const auto exact = lf_exact(sa, inverse(sa));

        WorkArray work{SuffixArray{sa.entries}};
        bwt_in_place(work, ct);
        const auto bwt = work_bytes(work);
        lf_counting_in_place(work, CountTable(ct));
        for (std::size_t i = 0; i < bwt.size(); ++i) {
            if (bwt[i] >= 2) CHECK(work.cells()[i] == exact[i]);
            if (bwt[i] == kSentinelDollar) {
                CHECK(work.cells()[i] >= 2);
                CHECK(work.cells()[i] <= ct.doc_count() + 1);  // provisional band
            }
        }
    }
}

TEST_CASE("bwt inversion rebuilds the text") {
    const ConcatText ct = ConcatText::from_documents({"ab", "a"});
    const SuffixArray sa = suffix_sort(ct);
    WorkArray work{SuffixArray{sa.entries}};
    bwt_in_place(work, ct);
    const auto bwt = work_bytes(work);
    const auto lf = lf_exact(sa, inverse(sa));
    CHECK(invert_bwt(bwt, lf, 1) == ct.bytes());

    const ConcatText single = ConcatText::from_documents({"x"});
    const SuffixArray sa2 = suffix_sort(single);
    WorkArray work2{SuffixArray{sa2.entries}};
    bwt_in_place(work2, single);
    CHECK(invert_bwt(work_bytes(work2), lf_exact(sa2, inverse(sa2)), 1) == single.bytes());

    // a single empty document: text "$#"
    const ConcatText tiny = ConcatText::from_documents({""});
    const SuffixArray sa3 = suffix_sort(tiny);
    WorkArray work3{SuffixArray{sa3.entries}};
    bwt_in_place(work3, tiny);
    CHECK(invert_bwt(work_bytes(work3), lf_exact(sa3, inverse(sa3)), 1) == tiny.bytes());
}

TEST_CASE("bwt inversion rejects short cycles") {
    // LF with a 2-cycle {1,2} and a fixed point 3 cannot spell a 3-symbol text
    const std::vector<std::uint8_t> bwt = {1, 0, 'x'};
    const std::vector<pos_type> lf = {2, 1, 3};
    CHECK(error_code_of([&] { invert_bwt(bwt, lf, 1); }) == errc::cycle_too_short);

    const std::vector<pos_type> wrong_len = {2, 1};
    CHECK(error_code_of([&] { invert_bwt(bwt, wrong_len, 1); }) == errc::length_mismatch);
}

TEST_CASE("lf exact forms a single N-cycle") {
    std::mt19937_64 rng(31);
    const auto docs = dak::testing::random_collection(rng, 4, 6, 200);
    const ConcatText ct = ConcatText::from_documents(docs);
    const SuffixArray sa = suffix_sort(ct);
    const auto lf = lf_exact(sa, inverse(sa));
    std::vector<bool> seen(lf.size(), false);
    pos_type pos = 1;
    for (std::size_t steps = 0; steps < lf.size(); ++steps) {
        CHECK(!seen[pos - 1]);
        seen[pos - 1] = true;
        pos = lf[pos - 1];
    }
    CHECK(pos == 1);
}
