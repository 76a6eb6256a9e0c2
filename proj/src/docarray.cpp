#include "dak/docarray.hpp"

#include <cassert>
#include <string>

#include "dak/workspace.hpp"

namespace dak {

// Friend of WorkArray: runs the traversal that rewrites LF cells back into
// suffix-array entries while emitting DA.
struct Alg1Traversal {
    static DocumentArray run(WorkArray& work, const ConcatText& text) {
        work.require(WorkArray::Phase::lf, "da_inplace traversal");
        const pos_type n = text.size();
        const pos_type d = text.doc_count();
        std::vector<pos_type>& cells = work.cells_;

        DocumentArray da;
        da.entries.assign(n, 0);

#ifndef NDEBUG
        std::vector<bool> visited(n, false);
#endif

        pos_type pos = 1;
        pos_type doc = d + 1;
        for (pos_type i = n; i != 0; --i) {
            pos_type tmp = cells[pos - 1];
            if (tmp < 1 || tmp > n)
                throw error(errc::malformed_sa, "LF cell " + std::to_string(pos) +
                                                    " holds " + std::to_string(tmp) +
                                                    ", outside [1, " + std::to_string(n) + "]");
            if (doc == 0)
                throw error(errc::malformed_sa,
                            "separator budget exhausted at step " + std::to_string(i) +
                                "; the traversal revisited a cell");
#ifndef NDEBUG
            assert(!visited[pos - 1] && "traversal must visit each cell exactly once");
            visited[pos - 1] = true;
#endif
            cells[pos - 1] = i;
            da.entries[pos - 1] = doc;
            if (tmp <= d + 1) {
                // BWT symbol here was a separator (or the final #): its true
                // LF target is the current document counter.
                tmp = doc;
                --doc;
            }
            pos = tmp;
        }
        if (doc != 0 || pos != 1)
            throw error(errc::malformed_sa, "traversal ended with document counter " +
                                                std::to_string(doc) + " at position " +
                                                std::to_string(pos));
        work.phase_ = WorkArray::Phase::sa_restored;
        return da;
    }
};

InplaceResult da_inplace(WorkArray work, const ConcatText& text, const CountTable& counts) {
    bwt_in_place(work, text);
    lf_counting_in_place(work, counts);
    DocumentArray da = Alg1Traversal::run(work, text);
    return {std::move(da), std::move(work)};
}

DocumentArray da_via_isa(const SuffixArray& sa, const ConcatText& text) {
    const pos_type n = text.size();
    if (sa.size() != n)
        throw error(errc::length_mismatch, "SA of " + std::to_string(sa.size()) +
                                               " entries over a text of " + std::to_string(n));

    metered_vector<pos_type> isa(n, 0);
    for (pos_type i = 0; i < n; ++i) {
        const pos_type p = sa.entries[i];
        if (p < 1 || p > n || isa[p - 1] != 0)
            throw error(errc::not_a_permutation, "suffix array entry " + std::to_string(p));
        isa[p - 1] = i + 1;
    }

    DocumentArray da;
    da.entries.assign(n, 0);
    for (pos_type j = 1; j <= text.doc_count(); ++j)
        for (pos_type i = text.boundary(j - 1) + 1; i <= text.boundary(j); ++i)
            da.entries[isa[i - 1] - 1] = j;
    da.entries[isa[n - 1] - 1] = text.doc_count() + 1;
    return da;
}

DocumentArray da_via_rank(const SuffixArray& sa, const RankBitvector& separators) {
    if (separators.universe() != sa.size())
        throw error(errc::universe_mismatch,
                    "bitvector universe " + std::to_string(separators.universe()) +
                        " vs suffix array of " + std::to_string(sa.size()));
    DocumentArray da;
    da.entries.resize(sa.size());
    for (std::size_t i = 0; i < sa.size(); ++i)
        da.entries[i] = static_cast<std::uint32_t>(separators.rank1(sa.entries[i] - 1)) + 1;
    return da;
}

VerifyReport verify_da(const DocumentArray& da, const SuffixArray& sa, const ConcatText& text) {
    const pos_type n = text.size();
    if (da.size() != n || sa.size() != n)
        throw error(errc::length_mismatch, "DA of " + std::to_string(da.size()) + ", SA of " +
                                               std::to_string(sa.size()) + ", text of " +
                                               std::to_string(n));
    VerifyReport report;
    report.histogram.assign(text.doc_count() + 1, 0);
    report.ok = true;
    for (pos_type i = 1; i <= n; ++i) {
        const std::uint32_t value = da.at(i);
        if (value >= 1 && value <= text.doc_count() + 1) ++report.histogram[value - 1];
        if (report.ok && value != text.document_of(sa.at(i))) {
            report.ok = false;
            report.first_mismatch = i;
        }
    }
    report.checked = n;
    return report;
}

} // namespace dak
