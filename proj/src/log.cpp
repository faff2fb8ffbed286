#include "log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace catnoise {

LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("CATNOISE_LOG");
        if (!env) return LogLevel::Warn;
        std::string v(env);
        if (v == "error") return LogLevel::Error;
        if (v == "warn") return LogLevel::Warn;
        if (v == "info") return LogLevel::Info;
        if (v == "debug") return LogLevel::Debug;
        return LogLevel::Warn;
    }();
    return level;
}

void log_message(LogLevel level, const std::string& msg) {
    static std::mutex mu;
    static const char* names[] = {"error", "warn", "info", "debug"};
    std::lock_guard<std::mutex> lock(mu);
    std::cerr << "[catnoise:" << names[static_cast<int>(level)] << "] " << msg << "\n";
}

} // namespace catnoise
