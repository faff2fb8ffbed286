#pragma once

#include <sstream>

namespace catnoise {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Level comes from CATNOISE_LOG={error,warn,info,debug}; default warn.
// All diagnostics go to stderr; results never do.
LogLevel log_level();
void log_message(LogLevel level, const std::string& msg);

#define CATNOISE_LOG_AT(level, expr)                                    \
    do {                                                                \
        if (static_cast<int>(level) <= static_cast<int>(::catnoise::log_level())) { \
            std::ostringstream os_;                                     \
            os_ << expr;                                                \
            ::catnoise::log_message(level, os_.str());                  \
        }                                                               \
    } while (0)

#define CATNOISE_WARN(expr) CATNOISE_LOG_AT(::catnoise::LogLevel::Warn, expr)
#define CATNOISE_INFO(expr) CATNOISE_LOG_AT(::catnoise::LogLevel::Info, expr)
#define CATNOISE_DEBUG(expr) CATNOISE_LOG_AT(::catnoise::LogLevel::Debug, expr)

} // namespace catnoise
