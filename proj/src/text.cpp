#include "dak/text.hpp"

#include <algorithm>
#include <bitset>
#include <limits>

namespace dak {

const char* to_string(errc code) noexcept {
    switch (code) {
        case errc::reserved_byte_in_document: return "ReservedByteInDocument";
        case errc::empty_collection: return "EmptyCollection";
        case errc::position_out_of_range: return "PositionOutOfRange";
        case errc::oracle_cap_exceeded: return "OracleCapExceeded";
        case errc::not_a_permutation: return "NotAPermutation";
        case errc::wrong_phase: return "WrongPhase";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::malformed_sa: return "MalformedSA";
        case errc::cycle_too_short: return "CycleTooShort";
        case errc::universe_mismatch: return "UniverseMismatch";
        case errc::prefix_out_of_range: return "PrefixOutOfRange";
        case errc::index_too_large: return "IndexTooLarge";
        case errc::parse_error: return "ParseError";
        case errc::corrupt_file: return "CorruptFile";
        case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

namespace {

constexpr std::uint64_t kMaxN = (std::uint64_t{1} << 31) - 1;

} // namespace

ConcatText ConcatText::from_documents(const std::vector<std::string>& docs) {
    if (docs.empty())
        throw error(errc::empty_collection, "collection has no documents");

    std::uint64_t total = 1;  // the trailing '#'
    for (std::size_t k = 0; k < docs.size(); ++k) {
        const std::string& doc = docs[k];
        for (std::size_t off = 0; off < doc.size(); ++off) {
            const auto b = static_cast<std::uint8_t>(doc[off]);
            if (b == kSentinelHash || b == kSentinelDollar)
                throw error(errc::reserved_byte_in_document,
                            "document " + std::to_string(k + 1) + ", offset " +
                                std::to_string(off + 1) + ": byte 0x0" + std::to_string(b) +
                                " is reserved for separators");
        }
        total += doc.size() + 1;
    }
    if (total > kMaxN)
        throw error(errc::index_too_large,
                    "collection of " + std::to_string(total) + " bytes exceeds the 2^31-1 limit");

    ConcatText ct;
    ct.bytes_.reserve(total);
    for (const std::string& doc : docs) {
        ct.bytes_.insert(ct.bytes_.end(), doc.begin(), doc.end());
        ct.bytes_.push_back(kSentinelDollar);
    }
    ct.bytes_.push_back(kSentinelHash);
    ct.finish();
    return ct;
}

ConcatText ConcatText::from_raw(std::vector<std::uint8_t> bytes) {
    if (bytes.size() < 2)
        throw error(errc::corrupt_file, "raw text of " + std::to_string(bytes.size()) +
                                            " bytes cannot hold a separator and a terminator");
    if (bytes.size() > kMaxN)
        throw error(errc::index_too_large, "raw text of " + std::to_string(bytes.size()) +
                                               " bytes exceeds the 2^31-1 limit");
    if (bytes.back() != kSentinelHash)
        throw error(errc::corrupt_file, "raw text does not end with the 0x00 terminator");
    for (std::size_t i = 0; i + 1 < bytes.size(); ++i)
        if (bytes[i] == kSentinelHash)
            throw error(errc::corrupt_file,
                        "terminator byte 0x00 at interior offset " + std::to_string(i + 1));
    if (bytes[bytes.size() - 2] != kSentinelDollar)
        throw error(errc::corrupt_file, "last document is not closed by a 0x01 separator");

    ConcatText ct;
    ct.bytes_ = std::move(bytes);
    ct.finish();
    return ct;
}

void ConcatText::finish() {
    const auto n = static_cast<pos_type>(bytes_.size());
    boundaries_.clear();
    boundaries_.push_back(0);  // l_0
    std::bitset<256> present;
    for (pos_type i = 0; i < n; ++i) {
        present.set(bytes_[i]);
        if (bytes_[i] == kSentinelDollar)
            boundaries_.push_back(i + 1);  // l_j, 1-based
    }
    d_ = static_cast<pos_type>(boundaries_.size() - 1);
    sigma_ = static_cast<unsigned>(present.count());
    if (d_ == 0)
        throw error(errc::empty_collection, "text holds no document separator");
}

pos_type ConcatText::document_of(pos_type p) const {
    const pos_type n = size();
    if (p < 1 || p > n)
        throw error(errc::position_out_of_range,
                    "position " + std::to_string(p) + " not in [1, " + std::to_string(n) + "]");
    if (p == n)
        return d_ + 1;
    // smallest j with l_j >= p
    auto it = std::lower_bound(boundaries_.begin() + 1, boundaries_.end(), p);
    return static_cast<pos_type>(it - boundaries_.begin());
}

CountTable::CountTable(const ConcatText& text) {
    std::array<std::uint32_t, kCodes> occ{};
    for (std::uint8_t b : text.bytes()) ++occ[b];
    std::uint32_t running = 0;
    for (std::size_t c = 0; c < kCodes; ++c) {
        counts_[c] = running;
        running += occ[c];
    }
}

} // namespace dak
