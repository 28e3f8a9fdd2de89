#include "qng/log.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string_view>

namespace qng::log {
namespace {

Level from_env() {
  const char* v = std::getenv("QNG_LOG");
  if (v == nullptr) return Level::Warn;
  std::string_view s(v);
  if (s == "quiet") return Level::Quiet;
  if (s == "info") return Level::Info;
  if (s == "debug") return Level::Debug;
  return Level::Warn;
}

std::atomic<int>& current() {
  static std::atomic<int> lvl{static_cast<int>(from_env())};
  return lvl;
}

}  // namespace

Level level() { return static_cast<Level>(current().load(std::memory_order_relaxed)); }

void set_level(Level lvl) { current().store(static_cast<int>(lvl), std::memory_order_relaxed); }

void write(Level lvl, const std::string& msg) {
  static std::mutex mu;
  static constexpr const char* tags[] = {"", "warn", "info", "debug"};
  std::lock_guard<std::mutex> lock(mu);
  std::clog << "[qng " << tags[static_cast<int>(lvl)] << "] " << msg << '\n';
}

}  // namespace qng::log
