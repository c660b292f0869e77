#pragma once

#include <stdexcept>
#include <string>

namespace uscal {

/// Failure categories shared by the library, the C API and the CLI.
enum class errc {
    invalid_argument,
    dimension_mismatch,
    not_finite,
    rank_deficient,
    svd_failure,
    too_few_pixels,
    degenerate,
    parse_error,
    io_error,
};

/// Stable machine-greppable label, e.g. errc::rank_deficient -> "E_RANK_DEFICIENT".
const char* errc_label(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace uscal
