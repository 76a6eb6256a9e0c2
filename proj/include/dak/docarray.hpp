#ifndef DAK_DOCARRAY_HPP
#define DAK_DOCARRAY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dak/bwt_lf.hpp"
#include "dak/rank_bitvector.hpp"
#include "dak/suffix_array.hpp"
#include "dak/text.hpp"

namespace dak {

// DA[i] = document of the suffix at SA[i], values in [1, d+1]; DA[1] = d+1
// (the # suffix). Always 32-bit entries: d < 2^31.
struct DocumentArray {
    std::vector<std::uint32_t> entries;

    std::size_t size() const noexcept { return entries.size(); }
    std::uint32_t at(pos_type i) const { return entries[i - 1]; }  // 1-based
};

struct InplaceResult {
    DocumentArray da;
    WorkArray work;  // phase SA_RESTORED, cell-for-cell the input SA
};

// The in-place method: turns the suffix array into the BWT, then into the
// counting-pass LF, then walks T^cat right to left; each step writes the
// current document id into DA and the suffix index back into the cell it
// leaves, so the suffix array is rebuilt in its own space. Workspace beyond
// the work array, text and DA: one consumed count-table copy plus loop
// locals.
//
// Takes the WorkArray by value and hands it back restored. `counts` must be
// the count table of `text`; cells must hold the suffix array of `text`
// (violations surface as errc::malformed_sa).
InplaceResult da_inplace(WorkArray work, const ConcatText& text, const CountTable& counts);

// Baseline: inverse permutation first (N extra words, metered), then fills
// DA document by document, DA[ISA[i]] = j for i in l_{j-1}+1 .. l_j.
DocumentArray da_via_isa(const SuffixArray& sa, const ConcatText& text);

// Baseline: DA[i] = rank1(bit, SA[i] - 1) + 1 over the separator
// bitvector. The rank is exclusive, so a separator suffix stays in its own
// document and all methods agree.
DocumentArray da_via_rank(const SuffixArray& sa, const RankBitvector& separators);

struct VerifyReport {
    bool ok = false;
    std::optional<pos_type> first_mismatch;       // 1-based index into DA
    std::vector<std::uint64_t> histogram;         // histogram[j-1] = count of value j
    std::uint64_t checked = 0;
};

// Checks DA against the definitional oracle document_of(SA[i]) entry by
// entry. Mismatches are report content, not errors.
VerifyReport verify_da(const DocumentArray& da, const SuffixArray& sa, const ConcatText& text);

} // namespace dak

#endif // DAK_DOCARRAY_HPP
