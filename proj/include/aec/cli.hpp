#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aec::cli {

// Batch frontend.  JSON run report on `out`, human-readable log on `err`.
// Exit codes: 0 ok, 1 refused/failed, 2 violation (theorem-falsifying
// event), 3 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace aec::cli
