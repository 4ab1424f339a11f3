#pragma once

#include <optional>
#include <string>
#include <vector>

#include "talc/algebra/numbers.hpp"

namespace talc::cli {

/// Reference-sequence resolution for the comparison command, in order:
/// embedded golden prefix, on-disk cache (b<digits>.txt under the cache
/// directory), live fetch of https://oeis.org/<ID>/b<digits>.txt (only when
/// fetching is explicitly enabled and offline mode is not).
struct OeisClient {
    std::string cache_dir;        // TALC_CACHE_DIR or --cache-dir
    bool offline = false;         // TALC_OFFLINE=1 or --offline
    bool fetch_enabled = false;   // --fetch

    /// Throws fetch_error when no source can produce the values.
    std::vector<Int> terms(const std::string& oeis_id) const;

    std::string cache_path(const std::string& oeis_id) const;
};

std::string bfile_name(const std::string& oeis_id);

}  // namespace talc::cli
