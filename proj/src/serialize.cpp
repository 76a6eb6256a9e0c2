#include "dak/serialize.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <vector>

namespace dak {

namespace {

void put_u16(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>(v >> 8));
}

void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_u64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

struct Header {
    std::uint8_t width = 0;
    std::uint64_t n = 0;
    std::uint64_t d = 0;
};

void write_header(std::ostream& out, const char magic[4], std::uint8_t width, std::uint64_t n,
                  std::uint64_t d) {
    std::string h(magic, 4);
    h.push_back(static_cast<char>(kFormatVersion));
    h.push_back(static_cast<char>(width));
    put_u16(h, 0);
    put_u64(h, n);
    put_u64(h, d);
    out.write(h.data(), static_cast<std::streamsize>(h.size()));
}

Header read_header(std::istream& in, const char magic[4]) {
    std::array<unsigned char, kHeaderBytes> raw{};
    in.read(reinterpret_cast<char*>(raw.data()), kHeaderBytes);
    if (in.gcount() != static_cast<std::streamsize>(kHeaderBytes))
        throw error(errc::corrupt_file, "file shorter than the " + std::to_string(kHeaderBytes) +
                                            "-byte header");
    if (std::memcmp(raw.data(), magic, 4) != 0)
        throw error(errc::corrupt_file, std::string("bad magic, expected \"") +
                                            std::string(magic, 4) + "\"");
    if (raw[4] != kFormatVersion)
        throw error(errc::corrupt_file, "unsupported version " + std::to_string(raw[4]));
    Header h;
    h.width = raw[5];
    if (h.width != 4 && h.width != 8)
        throw error(errc::corrupt_file, "entry width " + std::to_string(h.width) +
                                            ", expected 4 or 8");
    h.n = get_u64(raw.data() + 8);
    h.d = get_u64(raw.data() + 16);
    return h;
}

template <typename Entry>
std::vector<Entry> read_entries(std::istream& in, const Header& h, const char* what) {
    if (h.n > (std::uint64_t{1} << 31))
        throw error(errc::index_too_large,
                    std::string(what) + " holds " + std::to_string(h.n) + " entries");
    std::vector<Entry> entries(static_cast<std::size_t>(h.n));
    if (h.width == sizeof(Entry)) {
        in.read(reinterpret_cast<char*>(entries.data()),
                static_cast<std::streamsize>(h.n * sizeof(Entry)));
        if (in.gcount() != static_cast<std::streamsize>(h.n * sizeof(Entry)))
            throw error(errc::corrupt_file,
                        std::string(what) + " truncated: expected " +
                            std::to_string(h.n * sizeof(Entry)) + " payload bytes, got " +
                            std::to_string(in.gcount()));
    } else {
        // width-8 file with entries that must fit 32 bits
        std::vector<std::uint64_t> wide(static_cast<std::size_t>(h.n));
        in.read(reinterpret_cast<char*>(wide.data()), static_cast<std::streamsize>(h.n * 8));
        if (in.gcount() != static_cast<std::streamsize>(h.n * 8))
            throw error(errc::corrupt_file,
                        std::string(what) + " truncated: expected " + std::to_string(h.n * 8) +
                            " payload bytes, got " + std::to_string(in.gcount()));
        for (std::size_t i = 0; i < wide.size(); ++i) {
            if (wide[i] > std::numeric_limits<Entry>::max())
                throw error(errc::index_too_large, std::string(what) + " entry " +
                                                       std::to_string(i + 1) + " overflows 32 bits");
            entries[i] = static_cast<Entry>(wide[i]);
        }
    }
    char extra;
    if (in.read(&extra, 1); in.gcount() != 0)
        throw error(errc::corrupt_file, std::string(what) + " has trailing bytes after " +
                                            std::to_string(h.n) + " entries");
    return entries;
}

static_assert(std::endian::native == std::endian::little,
              "entry payloads are written with native byte order");

} // namespace

void write_suffix_array(std::ostream& out, const SuffixArray& sa, std::uint64_t d) {
    write_header(out, kSaMagic, sa.width_bytes(), sa.size(), d);
    out.write(reinterpret_cast<const char*>(sa.entries.data()),
              static_cast<std::streamsize>(sa.entries.size() * sizeof(pos_type)));
    if (!out) throw error(errc::io_error, "suffix array write failed");
}

SuffixArray read_suffix_array(std::istream& in, std::uint64_t& d) {
    const Header h = read_header(in, kSaMagic);
    d = h.d;
    SuffixArray sa;
    sa.entries = read_entries<pos_type>(in, h, "suffix array");
    return sa;
}

void write_document_array(std::ostream& out, const DocumentArray& da, std::uint64_t d) {
    write_header(out, kDaMagic, 4, da.size(), d);
    out.write(reinterpret_cast<const char*>(da.entries.data()),
              static_cast<std::streamsize>(da.entries.size() * sizeof(std::uint32_t)));
    if (!out) throw error(errc::io_error, "document array write failed");
}

DocumentArray read_document_array(std::istream& in, std::uint64_t& d) {
    const Header h = read_header(in, kDaMagic);
    if (h.width != 4)
        throw error(errc::corrupt_file, "document arrays are stored with 4-byte entries, file "
                                        "declares " + std::to_string(h.width));
    d = h.d;
    DocumentArray da;
    da.entries = read_entries<std::uint32_t>(in, h, "document array");
    return da;
}

namespace {

template <typename Fn>
auto with_input(const std::filesystem::path& path, Fn fn) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::io_error, "cannot open " + path.string());
    try {
        return fn(in);
    } catch (const error& e) {
        throw error(e.code(), path.string() + ": " + e.what());
    }
}

template <typename Fn>
void with_output(const std::filesystem::path& path, Fn fn) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw error(errc::io_error, "cannot create " + path.string());
    fn(out);
    out.flush();
    if (!out) throw error(errc::io_error, "write to " + path.string() + " failed");
}

} // namespace

void save_suffix_array(const std::filesystem::path& path, const SuffixArray& sa, std::uint64_t d) {
    with_output(path, [&](std::ostream& out) { write_suffix_array(out, sa, d); });
}

SuffixArray load_suffix_array(const std::filesystem::path& path, std::uint64_t& d) {
    return with_input(path, [&](std::istream& in) { return read_suffix_array(in, d); });
}

void save_document_array(const std::filesystem::path& path, const DocumentArray& da,
                         std::uint64_t d) {
    with_output(path, [&](std::ostream& out) { write_document_array(out, da, d); });
}

DocumentArray load_document_array(const std::filesystem::path& path, std::uint64_t& d) {
    return with_input(path, [&](std::istream& in) { return read_document_array(in, d); });
}

void save_raw_text(const std::filesystem::path& path, const ConcatText& text) {
    with_output(path, [&](std::ostream& out) {
        out.write(reinterpret_cast<const char*>(text.bytes().data()),
                  static_cast<std::streamsize>(text.bytes().size()));
    });
}

ConcatText load_raw_text(const std::filesystem::path& path) {
    return with_input(path, [&](std::istream& in) {
        std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
        return ConcatText::from_raw(std::move(bytes));
    });
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::io_error, "cannot open " + path.string());
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, std::string_view data) {
    with_output(path, [&](std::ostream& out) {
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
    });
}

std::uint64_t boundaries_digest(const ConcatText& text) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    auto mix = [&](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            hash ^= (v >> (8 * i)) & 0xff;
            hash *= 0x100000001b3ull;
        }
    };
    for (pos_type b : text.boundaries()) mix(b);
    return hash;
}

} // namespace dak
