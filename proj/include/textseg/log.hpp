#pragma once

#include <string>

namespace textseg {

// Verbosity comes from the TEXTSEG_LOG environment variable
// (quiet | warn | info | debug), read once per process. Default: warn.
enum class LogLevel { Quiet = 0, Warn = 1, Info = 2, Debug = 3 };

LogLevel log_level();

void log_warn(const std::string& msg);
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

}  // namespace textseg
