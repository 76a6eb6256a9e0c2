#ifndef DAK_BWT_LF_HPP
#define DAK_BWT_LF_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dak/suffix_array.hpp"
#include "dak/text.hpp"

namespace dak {

// The N cells that morph SA -> BWT -> LF -> SA during the in-place
// document-array computation. The phase tag records the current
// interpretation; every transition checks it (errc::wrong_phase).
class WorkArray {
public:
    enum class Phase { sa, bwt, lf, sa_restored };

    explicit WorkArray(SuffixArray sa) : cells_(std::move(sa.entries)), phase_(Phase::sa) {}
    explicit WorkArray(std::vector<pos_type> cells, Phase phase)
        : cells_(std::move(cells)), phase_(phase) {}

    Phase phase() const noexcept { return phase_; }
    std::size_t size() const noexcept { return cells_.size(); }
    std::span<const pos_type> cells() const noexcept { return cells_; }

    // Reinterprets restored cells as a suffix array again.
    SuffixArray release_suffix_array() &&;

private:
    void require(Phase expected, const char* op) const;

    std::vector<pos_type> cells_;
    Phase phase_;

    friend void bwt_in_place(WorkArray&, const ConcatText&);
    friend void lf_counting_in_place(WorkArray&, const CountTable&);
    friend struct Alg1Traversal;
};

// Lines 1-3: overwrite each SA entry with the code of the symbol preceding
// that suffix, BWT[i] = T^cat[SA[i]-1 mod N]. Phase sa -> bwt.
void bwt_in_place(WorkArray& work, const ConcatText& text);

// Lines 4-6: overwrite the BWT with the counting-pass LF. The table copy is
// consumed; cells_[i] becomes C[c] + rank_c(BWT, i) (1-based, inclusive).
// Cells whose BWT symbol was '$' land in [2, d+1] and are provisional;
// the in-place traversal corrects them on the fly. Phase bwt -> lf.
void lf_counting_in_place(WorkArray& work, const CountTable& counts);

// Exact LF-array through the inverse permutation: LF[i] = ISA[SA[i]-1 mod N].
// Correct for every symbol, separators included. 1-based values.
std::vector<pos_type> lf_exact(const SuffixArray& sa, const InversePermutation& isa);

// Rebuilds T^cat by walking the LF cycle backwards from `start` (the
// position of the # suffix, 1). `lf` must be an exact LF-array;
// errc::cycle_too_short when it does not close a single N-cycle.
std::vector<std::uint8_t> invert_bwt(std::span<const std::uint8_t> bwt,
                                     std::span<const pos_type> lf, pos_type start);

} // namespace dak

#endif // DAK_BWT_LF_HPP
