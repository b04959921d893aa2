#include "qrep/log.hpp"

#include <cstdlib>
#include <string>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

namespace qrep {

void init_logging_from_env() {
  auto logger = spdlog::stderr_color_mt("qrep");
  spdlog::set_default_logger(logger);
  const char* env = std::getenv("QREP_LOG");
  const std::string level = env ? env : "error";
  if (level == "debug")
    spdlog::set_level(spdlog::level::debug);
  else if (level == "info")
    spdlog::set_level(spdlog::level::info);
  else
    spdlog::set_level(spdlog::level::err);
}

}  // namespace qrep
