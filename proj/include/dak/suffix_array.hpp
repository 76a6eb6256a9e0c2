#ifndef DAK_SUFFIX_ARRAY_HPP
#define DAK_SUFFIX_ARRAY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dak/text.hpp"

namespace dak {

// Suffix array under the distinct-separator order: entries[i-1] = SA[i],
// values 1-based in [1,N]. Serialized width: 4-byte entries for N < 2^31,
// 8-byte otherwise (serialize.hpp).
struct SuffixArray {
    std::vector<pos_type> entries;

    std::size_t size() const noexcept { return entries.size(); }
    pos_type at(pos_type i) const { return entries[i - 1]; }  // 1-based
    unsigned width_bytes() const noexcept { return 4; }
};

// ISA with entries[SA[i]] = i, same layout.
struct InversePermutation {
    std::vector<pos_type> entries;

    std::size_t size() const noexcept { return entries.size(); }
    pos_type at(pos_type p) const { return entries[p - 1]; }
};

// Sort key of the symbol at position p. Realizes the d-distinct-separator
// order without growing the alphabet: # -> 0, the '$' of document j -> j,
// a document byte c -> d + (c - 1). Total order # < $_1 < ... < $_d < bytes.
std::uint32_t rank_key(const ConcatText& text, pos_type p);

// Prefix-doubling construction over the rank_key sequence, O(N lg N).
// Every suffix is distinct before the text end (separator keys are
// distinct), so no tie-breaking is needed.
SuffixArray suffix_sort(const ConcatText& text);

// Comparison sort of whole rank_key sequences; verification oracle only.
// Refuses texts above `cap` (errc::oracle_cap_exceeded). The default cap is
// 10^5, overridable through the DAK_ORACLE_CAP environment variable.
SuffixArray naive_suffix_sort(const ConcatText& text);
SuffixArray naive_suffix_sort(const ConcatText& text, std::size_t cap);

std::size_t default_oracle_cap();

// Inverts a permutation; errc::not_a_permutation when entries are out of
// range or repeated.
InversePermutation inverse(const SuffixArray& sa);

} // namespace dak

#endif // DAK_SUFFIX_ARRAY_HPP
