#ifndef DAK_ERROR_HPP
#define DAK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dak {

// Every failure the library reports, so callers (and tests) can branch on
// the condition instead of parsing messages.
enum class errc {
    reserved_byte_in_document,
    empty_collection,
    position_out_of_range,
    oracle_cap_exceeded,
    not_a_permutation,
    wrong_phase,
    length_mismatch,
    malformed_sa,
    cycle_too_short,
    universe_mismatch,
    prefix_out_of_range,
    index_too_large,
    parse_error,
    corrupt_file,
    io_error,
};

const char* to_string(errc code) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace dak

#endif // DAK_ERROR_HPP
