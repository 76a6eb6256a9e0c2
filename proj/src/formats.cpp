#include "dak/formats.hpp"

#include <fstream>
#include <vector>

namespace dak {

InputFormat parse_input_format(std::string_view name) {
    if (name == "lines") return InputFormat::lines;
    if (name == "fasta") return InputFormat::fasta;
    if (name == "raw") return InputFormat::raw;
    throw error(errc::parse_error, "unknown input format '" + std::string(name) + "'");
}

const char* to_string(InputFormat format) noexcept {
    switch (format) {
        case InputFormat::lines: return "lines";
        case InputFormat::fasta: return "fasta";
        case InputFormat::raw: return "raw";
    }
    return "?";
}

ConcatText parse_lines(std::string_view data) {
    if (data.empty()) throw error(errc::empty_collection, "input file is empty");
    std::vector<std::string> docs;
    std::size_t start = 0;
    while (start < data.size()) {
        std::size_t end = data.find('\n', start);
        if (end == std::string_view::npos) end = data.size();
        docs.emplace_back(data.substr(start, end - start));
        start = end + 1;
    }
    return ConcatText::from_documents(docs);
}

ConcatText parse_fasta(std::string_view data) {
    std::vector<std::string> docs;
    std::size_t start = 0;
    std::size_t line_no = 0;
    bool in_record = false;
    while (start < data.size()) {
        std::size_t end = data.find('\n', start);
        if (end == std::string_view::npos) end = data.size();
        std::string_view line = data.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        if (!line.empty() && line.front() == '>') {
            docs.emplace_back();
            in_record = true;
        } else if (!line.empty()) {
            if (!in_record)
                throw error(errc::parse_error,
                            "line " + std::to_string(line_no) + ": sequence data before the "
                            "first '>' header");
            docs.back().append(line);
        }
        start = end + 1;
    }
    if (docs.empty()) throw error(errc::empty_collection, "FASTA input holds no records");
    return ConcatText::from_documents(docs);
}

ConcatText load_collection(const std::filesystem::path& path, InputFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::io_error, "cannot open " + path.string());
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw error(errc::io_error, "cannot read " + path.string());

    switch (format) {
        case InputFormat::lines: return parse_lines(data);
        case InputFormat::fasta: return parse_fasta(data);
        case InputFormat::raw:
            return ConcatText::from_raw(std::vector<std::uint8_t>(data.begin(), data.end()));
    }
    throw error(errc::parse_error, "unhandled input format");
}

} // namespace dak
