#include "textseg/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <mutex>

namespace textseg {

namespace {

std::mutex g_mutex;

LogLevel parse_level(const char* s) {
  if (!s) return LogLevel::Warn;
  const std::string v(s);
  if (v == "quiet") return LogLevel::Quiet;
  if (v == "warn") return LogLevel::Warn;
  if (v == "info") return LogLevel::Info;
  if (v == "debug") return LogLevel::Debug;
  return LogLevel::Warn;
}

void emit(LogLevel level, const char* tag, const std::string& msg) {
  if (log_level() < level) return;
  std::lock_guard<std::mutex> lock(g_mutex);
  std::fprintf(stderr, "[%s] %s\n", tag, msg.c_str());
}

}  // namespace

LogLevel log_level() {
  static const LogLevel level = parse_level(std::getenv("TEXTSEG_LOG"));
  return level;
}

void log_warn(const std::string& msg) { emit(LogLevel::Warn, "warn", msg); }
void log_info(const std::string& msg) { emit(LogLevel::Info, "info", msg); }
void log_debug(const std::string& msg) { emit(LogLevel::Debug, "debug", msg); }

}  // namespace textseg
