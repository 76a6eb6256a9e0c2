#include "dak/suffix_array.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace dak {

namespace {

// rank_key for all positions in one pass, 0-based array.
std::vector<std::uint32_t> key_sequence(const ConcatText& text) {
    const pos_type n = text.size();
    const pos_type d = text.doc_count();
    std::vector<std::uint32_t> key(n);
    for (pos_type i = 0; i < n; ++i) {
        const std::uint8_t c = text.bytes()[i];
        key[i] = (c == kSentinelHash) ? 0 : d + static_cast<std::uint32_t>(c) - 1;
    }
    for (pos_type j = 1; j <= d; ++j) key[text.boundary(j) - 1] = j;
    return key;
}

} // namespace

std::uint32_t rank_key(const ConcatText& text, pos_type p) {
    const pos_type n = text.size();
    if (p < 1 || p > n)
        throw error(errc::position_out_of_range,
                    "position " + std::to_string(p) + " not in [1, " + std::to_string(n) + "]");
    const std::uint8_t c = text.code_at(p);
    if (c == kSentinelHash) return 0;
    if (c == kSentinelDollar) return text.document_of(p);
    return text.doc_count() + static_cast<std::uint32_t>(c) - 1;
}

SuffixArray suffix_sort(const ConcatText& text) {
    const std::size_t n = text.size();
    std::vector<std::uint32_t> rank = key_sequence(text);

    std::vector<pos_type> sa(n), order(n);
    const std::size_t buckets =
        std::max<std::size_t>(n, *std::max_element(rank.begin(), rank.end()) + 1) + 1;
    std::vector<pos_type> count(buckets);

    // Stable counting sort of `order` by rank[.] into `sa`.
    auto counting_sort = [&](std::size_t key_bound) {
        std::fill(count.begin(), count.begin() + key_bound + 1, 0);
        for (pos_type i : order) ++count[rank[i] + 1];
        for (std::size_t c = 1; c <= key_bound; ++c) count[c] += count[c - 1];
        for (pos_type i : order) sa[count[rank[i]]++] = i;
    };

    std::iota(order.begin(), order.end(), pos_type{0});
    counting_sort(buckets - 1);

    std::vector<std::uint32_t> next_rank(n);
    std::uint32_t classes = 0;
    next_rank[sa[0]] = 0;
    for (std::size_t k = 1; k < n; ++k) {
        classes += rank[sa[k - 1]] != rank[sa[k]];
        next_rank[sa[k]] = classes;
    }
    rank.swap(next_rank);

    // The rotation order equals the suffix order: '#' is unique and
    // minimal, so no tied group ever runs past the text end.
    for (std::size_t len = 1; classes + 1 < n; len *= 2) {
        // order by the second key: shifting the already rank-sorted sa
        // left by len lists positions sorted by rank[(i + len) mod n]
        for (std::size_t k = 0, w = 0; k < n; ++k) {
            const std::size_t j = sa[k];
            order[w++] = static_cast<pos_type>(j >= len ? j - len : j + n - len);
        }
        counting_sort(classes + 1);

        classes = 0;
        next_rank[sa[0]] = 0;
        for (std::size_t k = 1; k < n; ++k) {
            const std::size_t a = sa[k - 1], b = sa[k];
            const std::size_t a2 = a + len < n ? a + len : a + len - n;
            const std::size_t b2 = b + len < n ? b + len : b + len - n;
            classes += (rank[a] != rank[b]) || (rank[a2] != rank[b2]);
            next_rank[sa[k]] = classes;
        }
        rank.swap(next_rank);
    }

    SuffixArray result;
    result.entries.resize(n);
    for (std::size_t k = 0; k < n; ++k) result.entries[k] = sa[k] + 1;
    return result;
}

std::size_t default_oracle_cap() {
    static const std::size_t cap = [] {
        if (const char* env = std::getenv("DAK_ORACLE_CAP")) {
            const long long v = std::atoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        }
        return std::size_t{100000};
    }();
    return cap;
}

SuffixArray naive_suffix_sort(const ConcatText& text) {
    return naive_suffix_sort(text, default_oracle_cap());
}

SuffixArray naive_suffix_sort(const ConcatText& text, std::size_t cap) {
    const std::size_t n = text.size();
    if (n > cap)
        throw error(errc::oracle_cap_exceeded, "text of " + std::to_string(n) +
                                                   " symbols exceeds the oracle cap of " +
                                                   std::to_string(cap));
    const std::vector<std::uint32_t> key = key_sequence(text);

    SuffixArray result;
    result.entries.resize(n);
    std::iota(result.entries.begin(), result.entries.end(), pos_type{1});
    std::sort(result.entries.begin(), result.entries.end(), [&](pos_type p, pos_type q) {
        return std::lexicographical_compare(key.begin() + (p - 1), key.end(),
                                            key.begin() + (q - 1), key.end());
    });
    return result;
}

InversePermutation inverse(const SuffixArray& sa) {
    const std::size_t n = sa.size();
    InversePermutation isa;
    isa.entries.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        const pos_type p = sa.entries[k];
        if (p < 1 || p > n)
            throw error(errc::not_a_permutation,
                        "entry " + std::to_string(p) + " outside [1, " + std::to_string(n) + "]");
        if (isa.entries[p - 1] != 0)
            throw error(errc::not_a_permutation, "position " + std::to_string(p) + " occurs twice");
        isa.entries[p - 1] = static_cast<pos_type>(k + 1);
    }
    return isa;
}

} // namespace dak
