#ifndef DAK_FORMATS_HPP
#define DAK_FORMATS_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "dak/text.hpp"

namespace dak {

// Input collection formats:
//   lines - one document per line, the line feed stripped
//   fasta - one document per record body, headers dropped, newlines stripped
//   raw   - an already-concatenated T^cat byte file (codes 0x00/0x01),
//           validated on load
enum class InputFormat { lines, fasta, raw };

InputFormat parse_input_format(std::string_view name);
const char* to_string(InputFormat format) noexcept;

ConcatText parse_lines(std::string_view data);
ConcatText parse_fasta(std::string_view data);

ConcatText load_collection(const std::filesystem::path& path, InputFormat format);

} // namespace dak

#endif // DAK_FORMATS_HPP
