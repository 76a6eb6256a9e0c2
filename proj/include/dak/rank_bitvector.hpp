#ifndef DAK_RANK_BITVECTOR_HPP
#define DAK_RANK_BITVECTOR_HPP

#include <cstdint>
#include <span>

#include "dak/text.hpp"
#include "dak/workspace.hpp"

namespace dak {

enum class RankBackend { plain, sparse };

// Bitvector over positions [1, N] with constant-time rank1, in two
// backends:
//
//   plain  - raw bits plus a two-level directory: absolute counts every
//            512 bits, packed 9-bit relative counts every 64 bits (the
//            superblock-initial count is implicit). Directory stays below
//            0.25 N bits.
//   sparse - Elias-Fano coding of the sorted set positions: low halves of
//            floor(lg(N/ones)) bits, a unary high part, and a high-stream
//            pointer sampled every 64 ones to bound select scans. rank1
//            binary-searches the decoded positions.
//
// Payload vectors are metered: building one inside a measured region
// charges the workspace meter. Immutable after build, queries thread-safe.
class RankBitvector {
public:
    // Overhead caps for the sparse backend, against the Elias-Fano bound
    // ones * (2 + ceil(lg(N/ones))): at most kSparseOverheadPerOne extra
    // bits per set bit plus kSparseOverheadConstant bits of word rounding.
    static constexpr unsigned kSparseOverheadPerOne = 2;
    static constexpr unsigned kSparseOverheadConstant = 192;

    // `ones` holds the set positions, 1-based, strictly increasing,
    // within [1, universe]. ones may be empty.
    static RankBitvector from_positions(std::uint64_t universe, std::span<const pos_type> ones,
                                        RankBackend backend);

    // Number of set bits among positions 1..prefix, for prefix in [0, N].
    std::uint64_t rank1(std::uint64_t prefix) const;

    bool bit(std::uint64_t position) const;  // 1-based

    std::uint64_t universe() const noexcept { return universe_; }
    std::uint64_t ones() const noexcept { return ones_; }
    RankBackend backend() const noexcept { return backend_; }

    // Exact allocated payload, in bits.
    std::uint64_t size_in_bits() const noexcept;
    // plain: the rank directory; sparse: the select samples.
    std::uint64_t directory_bits() const noexcept;

private:
    RankBitvector() = default;

    void build_plain(std::span<const pos_type> positions);
    void build_sparse(std::span<const pos_type> positions);
    std::uint64_t rank1_plain(std::uint64_t prefix) const;
    std::uint64_t rank1_sparse(std::uint64_t prefix) const;
    std::uint64_t select1_high(std::uint64_t k) const;  // position of one #k (0-based)
    std::uint64_t decoded_position(std::uint64_t k) const;

    std::uint64_t universe_ = 0;
    std::uint64_t ones_ = 0;
    RankBackend backend_ = RankBackend::plain;

    // plain payload
    metered_vector<std::uint64_t> words_;
    metered_vector<std::uint64_t> super_;
    metered_vector<std::uint64_t> rel_;

    // sparse payload
    unsigned low_width_ = 0;
    std::uint64_t high_len_ = 0;
    metered_vector<std::uint64_t> lows_;
    metered_vector<std::uint64_t> highs_;
    metered_vector<std::uint64_t> samples_;
};

// Eq.-4 bitvector of a collection: bit l_j set for every document j, the
// terminator position N clear. ones() == d.
RankBitvector separator_bitvector(const ConcatText& text, RankBackend backend);

} // namespace dak

#endif // DAK_RANK_BITVECTOR_HPP
