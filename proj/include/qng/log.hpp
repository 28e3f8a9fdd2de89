#pragma once

#include <sstream>
#include <string>

namespace qng::log {

enum class Level { Quiet = 0, Warn = 1, Info = 2, Debug = 3 };

// Level is read once from QNG_LOG (quiet|warn|info|debug); default warn.
Level level();
void set_level(Level lvl);
void write(Level lvl, const std::string& msg);

template <typename... Args>
void emit(Level lvl, Args&&... args) {
  if (static_cast<int>(lvl) > static_cast<int>(level())) return;
  std::ostringstream os;
  (os << ... << args);
  write(lvl, os.str());
}

template <typename... Args>
void warn(Args&&... args) { emit(Level::Warn, std::forward<Args>(args)...); }
template <typename... Args>
void info(Args&&... args) { emit(Level::Info, std::forward<Args>(args)...); }
template <typename... Args>
void debug(Args&&... args) { emit(Level::Debug, std::forward<Args>(args)...); }

}  // namespace qng::log
