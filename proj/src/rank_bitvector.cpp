#include "dak/rank_bitvector.hpp"

#include <bit>
#include <string>

namespace dak {

namespace {

constexpr unsigned kBlockBits = 64;
constexpr unsigned kBlocksPerSuper = 8;
constexpr unsigned kRelWidth = 9;  // relative counts < 512

void pack_bits(metered_vector<std::uint64_t>& v, std::uint64_t bit_index, unsigned width,
               std::uint64_t value) {
    const std::uint64_t w = bit_index >> 6;
    const unsigned off = static_cast<unsigned>(bit_index & 63);
    v[w] |= value << off;
    if (off + width > 64) v[w + 1] |= value >> (64 - off);
}

std::uint64_t read_bits(const metered_vector<std::uint64_t>& v, std::uint64_t bit_index,
                        unsigned width) {
    const std::uint64_t w = bit_index >> 6;
    const unsigned off = static_cast<unsigned>(bit_index & 63);
    std::uint64_t x = v[w] >> off;
    if (off + width > 64) x |= v[w + 1] << (64 - off);
    return width == 64 ? x : (x & ((std::uint64_t{1} << width) - 1));
}

std::uint64_t words_for(std::uint64_t bits) { return (bits + 63) / 64; }

} // namespace

RankBitvector RankBitvector::from_positions(std::uint64_t universe,
                                            std::span<const pos_type> ones, RankBackend backend) {
    RankBitvector bv;
    bv.universe_ = universe;
    bv.ones_ = ones.size();
    bv.backend_ = backend;

    pos_type last = 0;
    for (pos_type p : ones) {
        if (p <= last || p > universe)
            throw error(errc::position_out_of_range,
                        "set positions must be strictly increasing within [1, " +
                            std::to_string(universe) + "]");
        last = p;
    }

    if (backend == RankBackend::plain)
        bv.build_plain(ones);
    else
        bv.build_sparse(ones);
    return bv;
}

// ---------------------------------------------------------------------------
// plain backend
// ---------------------------------------------------------------------------

void RankBitvector::build_plain(std::span<const pos_type> positions) {
    const std::uint64_t nwords = words_for(universe_);
    words_.assign(nwords, 0);
    for (pos_type p : positions) words_[(p - 1) >> 6] |= std::uint64_t{1} << ((p - 1) & 63);

    // Counts at every block boundary b = 0..nwords (the closing boundary
    // included so rank1(N) needs no special case). Boundaries at b % 8 == 0
    // get an absolute superblock count, the rest a 9-bit count relative to
    // their superblock.
    const std::uint64_t boundaries = nwords + 1;
    const std::uint64_t n_super = (boundaries + kBlocksPerSuper - 1) / kBlocksPerSuper;
    super_.assign(n_super, 0);
    rel_.assign(words_for((boundaries - n_super) * kRelWidth), 0);

    std::uint64_t cum = 0;
    for (std::uint64_t b = 0; b < boundaries; ++b) {
        const std::uint64_t sb = b / kBlocksPerSuper;
        if (b % kBlocksPerSuper == 0)
            super_[sb] = cum;
        else
            pack_bits(rel_, (b - sb - 1) * kRelWidth, kRelWidth, cum - super_[sb]);
        if (b < nwords) cum += static_cast<unsigned>(std::popcount(words_[b]));
    }
}

std::uint64_t RankBitvector::rank1_plain(std::uint64_t prefix) const {
    const std::uint64_t b = prefix >> 6;
    const unsigned r = static_cast<unsigned>(prefix & 63);
    const std::uint64_t sb = b / kBlocksPerSuper;
    std::uint64_t result = super_[sb];
    if (b % kBlocksPerSuper != 0) result += read_bits(rel_, (b - sb - 1) * kRelWidth, kRelWidth);
    if (r != 0)
        result += static_cast<unsigned>(
            std::popcount(words_[b] & ((std::uint64_t{1} << r) - 1)));
    return result;
}

// ---------------------------------------------------------------------------
// sparse backend
// ---------------------------------------------------------------------------

void RankBitvector::build_sparse(std::span<const pos_type> positions) {
    const std::uint64_t m = positions.size();
    lows_.clear();
    highs_.clear();
    samples_.clear();
    low_width_ = 0;
    high_len_ = 0;
    if (m == 0) return;  // rank is identically zero

    low_width_ = static_cast<unsigned>(std::bit_width(universe_ / m) - 1);
    if (low_width_ > 0) lows_.assign(words_for(m * low_width_), 0);

    const std::uint64_t high_last = (std::uint64_t{positions.back()} - 1) >> low_width_;
    high_len_ = m + high_last + 1;
    highs_.assign(words_for(high_len_), 0);
    samples_.assign((m + 63) / 64, 0);

    for (std::uint64_t k = 0; k < m; ++k) {
        const std::uint64_t q = std::uint64_t{positions[k]} - 1;
        if (low_width_ > 0)
            pack_bits(lows_, k * low_width_, low_width_, q & ((std::uint64_t{1} << low_width_) - 1));
        const std::uint64_t high_pos = k + (q >> low_width_);
        highs_[high_pos >> 6] |= std::uint64_t{1} << (high_pos & 63);
        if (k % 64 == 0) samples_[k / 64] = high_pos;
    }
}

std::uint64_t RankBitvector::select1_high(std::uint64_t k) const {
    std::uint64_t pos = samples_[k / 64];
    std::uint64_t remaining = k % 64;  // set bits to skip after `pos`
    if (remaining == 0) return pos;
    std::uint64_t w = pos >> 6;
    // bits strictly after pos within its word
    std::uint64_t word = (pos & 63) == 63 ? 0 : highs_[w] & ~((std::uint64_t{2} << (pos & 63)) - 1);
    for (;;) {
        const auto c = static_cast<std::uint64_t>(std::popcount(word));
        if (c >= remaining) {
            while (remaining > 1) {
                word &= word - 1;
                --remaining;
            }
            return (w << 6) + static_cast<unsigned>(std::countr_zero(word));
        }
        remaining -= c;
        word = highs_[++w];
    }
}

std::uint64_t RankBitvector::decoded_position(std::uint64_t k) const {
    const std::uint64_t high = select1_high(k) - k;
    const std::uint64_t low = low_width_ ? read_bits(lows_, k * low_width_, low_width_) : 0;
    return (high << low_width_) | low;  // 0-based position
}

std::uint64_t RankBitvector::rank1_sparse(std::uint64_t prefix) const {
    if (prefix == 0 || ones_ == 0) return 0;
    const std::uint64_t q = prefix - 1;
    std::uint64_t lo = 0, hi = ones_;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (decoded_position(mid) <= q)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

// ---------------------------------------------------------------------------

std::uint64_t RankBitvector::rank1(std::uint64_t prefix) const {
    if (prefix > universe_)
        throw error(errc::prefix_out_of_range, "prefix " + std::to_string(prefix) +
                                                   " exceeds the universe " +
                                                   std::to_string(universe_));
    return backend_ == RankBackend::plain ? rank1_plain(prefix) : rank1_sparse(prefix);
}

bool RankBitvector::bit(std::uint64_t position) const {
    if (position < 1 || position > universe_)
        throw error(errc::position_out_of_range, "bit position " + std::to_string(position));
    if (backend_ == RankBackend::plain)
        return (words_[(position - 1) >> 6] >> ((position - 1) & 63)) & 1;
    return rank1(position) != rank1(position - 1);
}

std::uint64_t RankBitvector::size_in_bits() const noexcept {
    if (backend_ == RankBackend::plain)
        return 64 * (words_.size() + super_.size() + rel_.size());
    return 64 * (lows_.size() + highs_.size() + samples_.size());
}

std::uint64_t RankBitvector::directory_bits() const noexcept {
    if (backend_ == RankBackend::plain) return 64 * (super_.size() + rel_.size());
    return 64 * samples_.size();
}

RankBitvector separator_bitvector(const ConcatText& text, RankBackend backend) {
    return RankBitvector::from_positions(text.size(), text.boundaries().subspan(1), backend);
}

} // namespace dak
