#ifndef DAK_TEXT_HPP
#define DAK_TEXT_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dak/error.hpp"

namespace dak {

// Text positions, suffix array entries and document ids. 1-based where the
// value is a text position; arrays are stored 0-based with entry i-1
// holding position i. 32-bit: construction rejects N >= 2^31.
using pos_type = std::uint32_t;

// Separator encoding. '#' (the unique global terminator) is code 0, '$'
// (the per-document separator) is code 1, so `# < $ < everything` holds
// under plain byte comparison. Document bytes keep their own values;
// input bytes 0x00 and 0x01 are rejected.
inline constexpr std::uint8_t kSentinelHash = 0;
inline constexpr std::uint8_t kSentinelDollar = 1;

// The concatenation T_1 $ T_2 $ ... T_d $ # of a document collection,
// with its boundaries l[0..d] (l_0 = 0, l_j = end position of document j's
// separator) and alphabet statistics. Immutable after construction.
class ConcatText {
public:
    // Concatenates a collection. Documents may be empty; the collection may
    // not. Bytes 0x00/0x01 inside a document raise
    // errc::reserved_byte_in_document naming the document and offset.
    static ConcatText from_documents(const std::vector<std::string>& docs);

    // Adopts an already-concatenated byte sequence in the internal coding
    // (exactly one trailing 0x00, separators 0x01 at every document end).
    // Raises errc::corrupt_file when the sequence is not a valid T^cat.
    static ConcatText from_raw(std::vector<std::uint8_t> bytes);

    pos_type size() const noexcept { return static_cast<pos_type>(bytes_.size()); } // N
    pos_type doc_count() const noexcept { return d_; }                              // d
    unsigned sigma() const noexcept { return sigma_; }

    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

    // Symbol code at 1-based position p.
    std::uint8_t code_at(pos_type p) const { return bytes_[p - 1]; }

    // l_0..l_d; document j spans positions l_{j-1}+1 .. l_j, separator
    // included.
    std::span<const pos_type> boundaries() const noexcept { return boundaries_; }
    pos_type boundary(std::size_t j) const { return boundaries_[j]; }

    // Document id of the suffix starting at p: d+1 for p = N (the # suffix),
    // otherwise the unique j with l_{j-1} < p <= l_j. A separator position
    // belongs to its own document.
    pos_type document_of(pos_type p) const;

    // Length n_j of document j, separator included.
    pos_type doc_length(pos_type j) const { return boundaries_[j] - boundaries_[j - 1]; }

private:
    ConcatText() = default;
    void finish();  // derives boundaries/sigma from bytes_, validates

    std::vector<std::uint8_t> bytes_;
    std::vector<pos_type> boundaries_;
    pos_type d_ = 0;
    unsigned sigma_ = 0;
};

// C[c] = number of occurrences of symbols strictly smaller than c in
// T^cat[1,N], all '$' counted as one symbol. Fixed 256-entry table: sigma
// never exceeds the byte range, so this is the O(sigma lg N)-bit table at
// sigma = 256.
class CountTable {
public:
    static constexpr std::size_t kCodes = 256;

    explicit CountTable(const ConcatText& text);

    std::uint32_t smaller_than(unsigned code) const { return counts_[code]; }
    std::span<const std::uint32_t, kCodes> counts() const noexcept { return counts_; }

private:
    std::array<std::uint32_t, kCodes> counts_{};
};

} // namespace dak

#endif // DAK_TEXT_HPP
