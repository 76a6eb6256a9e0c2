#include "dak/bwt_lf.hpp"

#include <string>

#include "dak/workspace.hpp"

namespace dak {

namespace {

const char* phase_name(WorkArray::Phase phase) {
    switch (phase) {
        case WorkArray::Phase::sa: return "SA";
        case WorkArray::Phase::bwt: return "BWT";
        case WorkArray::Phase::lf: return "LF";
        case WorkArray::Phase::sa_restored: return "SA_RESTORED";
    }
    return "?";
}

} // namespace

void WorkArray::require(Phase expected, const char* op) const {
    if (phase_ != expected)
        throw error(errc::wrong_phase, std::string(op) + " needs phase " + phase_name(expected) +
                                           ", array is in phase " + phase_name(phase_));
}

SuffixArray WorkArray::release_suffix_array() && {
    require(Phase::sa_restored, "release_suffix_array");
    SuffixArray sa;
    sa.entries = std::move(cells_);
    return sa;
}

void bwt_in_place(WorkArray& work, const ConcatText& text) {
    work.require(WorkArray::Phase::sa, "bwt_in_place");
    const std::size_t n = text.size();
    if (work.size() != n)
        throw error(errc::length_mismatch, "work array of " + std::to_string(work.size()) +
                                               " cells over a text of " + std::to_string(n));
    const std::uint8_t* bytes = text.bytes().data();
    for (pos_type& cell : work.cells_)
        cell = bytes[(cell + n - 2) % n];  // T^cat[(SA[i]-2 mod N)+1], 0-based
    work.phase_ = WorkArray::Phase::bwt;
}

void lf_counting_in_place(WorkArray& work, const CountTable& counts) {
    work.require(WorkArray::Phase::bwt, "lf_counting_in_place");
    // The consumed copy is the algorithm's entire workspace.
    metered_vector<std::uint32_t> running(counts.counts().begin(), counts.counts().end());
    for (pos_type& cell : work.cells_) {
        std::uint32_t& slot = running[cell];
        slot += 1;  // increment-then-read: C[c] + rank_c(BWT, i), 1-based
        cell = slot;
    }
    work.phase_ = WorkArray::Phase::lf;
}

std::vector<pos_type> lf_exact(const SuffixArray& sa, const InversePermutation& isa) {
    const std::size_t n = sa.size();
    if (isa.size() != n)
        throw error(errc::length_mismatch, "SA of " + std::to_string(n) + " entries vs ISA of " +
                                               std::to_string(isa.size()));
    std::vector<pos_type> lf(n);
    for (std::size_t i = 0; i < n; ++i)
        lf[i] = isa.entries[(sa.entries[i] + n - 2) % n];
    return lf;
}

std::vector<std::uint8_t> invert_bwt(std::span<const std::uint8_t> bwt,
                                     std::span<const pos_type> lf, pos_type start) {
    const std::size_t n = bwt.size();
    if (lf.size() != n)
        throw error(errc::length_mismatch, "BWT of " + std::to_string(n) + " symbols vs LF of " +
                                               std::to_string(lf.size()));
    std::vector<std::uint8_t> text(n);
    text[n - 1] = kSentinelHash;
    pos_type pos = start;
    for (std::size_t k = n - 1; k >= 1; --k) {
        text[k - 1] = bwt[pos - 1];
        pos = lf[pos - 1];
        if (pos == start && k != 1)
            throw error(errc::cycle_too_short,
                        "LF cycle closed after " + std::to_string(n - k) + " of " +
                            std::to_string(n) + " steps");
    }
    if (n > 1 && lf[pos - 1] != start)
        throw error(errc::cycle_too_short, "LF walk did not return to the start position");
    return text;
}

} // namespace dak
