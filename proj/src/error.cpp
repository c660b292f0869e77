#include "uscal/error.hpp"

namespace uscal {

const char* errc_label(errc code) noexcept {
    switch (code) {
        case errc::invalid_argument: return "E_INVALID_ARGUMENT";
        case errc::dimension_mismatch: return "E_DIMENSION_MISMATCH";
        case errc::not_finite: return "E_NOT_FINITE";
        case errc::rank_deficient: return "E_RANK_DEFICIENT";
        case errc::svd_failure: return "E_SVD_FAILURE";
        case errc::too_few_pixels: return "E_TOO_FEW_PIXELS";
        case errc::degenerate: return "E_DEGENERATE";
        case errc::parse_error: return "E_PARSE";
        case errc::io_error: return "E_IO";
    }
    return "E_UNKNOWN";
}

} // namespace uscal
