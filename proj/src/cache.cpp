#include "kschur/cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>

namespace kschur::cache {

namespace fs = std::filesystem;

namespace {

struct State {
  std::mutex mu;
  std::optional<fs::path> dir = default_dir();
  std::atomic<std::size_t> corrupt{0};
};

State& state() {
  static State s;
  return s;
}

constexpr std::string_view kPrefix = "kostka-";

}  // namespace

std::optional<fs::path> default_dir() {
  if (const char* env = std::getenv(kEnvVar); env && *env) {
    if (std::string_view(env) == "off") return std::nullopt;
    return fs::path(env);
  }
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return fs::path(xdg) / "kschur";
  if (const char* home = std::getenv("HOME"); home && *home)
    return fs::path(home) / ".cache" / "kschur";
  return std::nullopt;
}

std::optional<fs::path> dir() {
  std::lock_guard lock(state().mu);
  return state().dir;
}

void set_dir(std::optional<fs::path> d) {
  std::lock_guard lock(state().mu);
  state().dir = std::move(d);
}

Stats stats() {
  Stats st;
  st.corrupt_detected = state().corrupt.load();
  auto d = dir();
  std::error_code ec;
  if (!d || !fs::is_directory(*d, ec)) return st;
  for (const auto& entry : fs::directory_iterator(*d, ec)) {
    if (!entry.is_regular_file()) continue;
    if (!entry.path().filename().string().starts_with(kPrefix)) continue;
    ++st.files;
    st.bytes += entry.file_size(ec);
  }
  return st;
}

std::size_t clear() {
  auto d = dir();
  std::error_code ec;
  if (!d || !fs::is_directory(*d, ec)) return 0;
  std::size_t removed = 0;
  for (const auto& entry : fs::directory_iterator(*d, ec)) {
    if (!entry.path().filename().string().starts_with(kPrefix)) continue;
    if (fs::remove(entry.path(), ec)) ++removed;
  }
  return removed;
}

std::string checksum(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<std::string> read(const std::string& name) {
  auto d = dir();
  if (!d) return std::nullopt;
  std::ifstream in(*d / name, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const std::string& name, const std::string& contents) {
  auto d = dir();
  if (!d) return;
  std::error_code ec;
  fs::create_directories(*d, ec);
  if (ec) return;
  std::random_device rd;
  const fs::path tmp = *d / (name + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << contents;
    if (!out) {
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, *d / name, ec);
  if (ec) fs::remove(tmp, ec);
}

void reject(const std::string& name) {
  ++state().corrupt;
  auto d = dir();
  if (!d) return;
  std::error_code ec;
  fs::remove(*d / name, ec);
}

}  // namespace kschur::cache
