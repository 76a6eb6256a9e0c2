#ifndef DAK_SERIALIZE_HPP
#define DAK_SERIALIZE_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "dak/docarray.hpp"
#include "dak/suffix_array.hpp"
#include "dak/text.hpp"

namespace dak {

// Index files share one preamble, all integers little-endian:
//
//   magic[4]   "DSAK" (suffix array) or "DDAK" (document array)
//   version    u8, currently 1
//   width      u8, bytes per entry: 4 when N < 2^31, 8 otherwise
//                  (document arrays are always width 4)
//   reserved   u16, zero
//   N          u64
//   d          u64
//
// followed by the N entries at the stated width.
inline constexpr char kSaMagic[4] = {'D', 'S', 'A', 'K'};
inline constexpr char kDaMagic[4] = {'D', 'D', 'A', 'K'};
inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr std::size_t kHeaderBytes = 24;

void write_suffix_array(std::ostream& out, const SuffixArray& sa, std::uint64_t d);
SuffixArray read_suffix_array(std::istream& in, std::uint64_t& d);

void write_document_array(std::ostream& out, const DocumentArray& da, std::uint64_t d);
DocumentArray read_document_array(std::istream& in, std::uint64_t& d);

// File wrappers; errors carry the path.
void save_suffix_array(const std::filesystem::path& path, const SuffixArray& sa, std::uint64_t d);
SuffixArray load_suffix_array(const std::filesystem::path& path, std::uint64_t& d);
void save_document_array(const std::filesystem::path& path, const DocumentArray& da,
                         std::uint64_t d);
DocumentArray load_document_array(const std::filesystem::path& path, std::uint64_t& d);

// T^cat in its internal coding, byte for byte.
void save_raw_text(const std::filesystem::path& path, const ConcatText& text);
ConcatText load_raw_text(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view data);

// FNV-1a over the little-endian encoding of l_0..l_d; sidecar fingerprint.
std::uint64_t boundaries_digest(const ConcatText& text);

} // namespace dak

#endif // DAK_SERIALIZE_HPP
