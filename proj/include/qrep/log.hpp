#pragma once

namespace qrep {

/// Set the spdlog level from QREP_LOG (error, info or debug); default error.
void init_logging_from_env();

}  // namespace qrep
