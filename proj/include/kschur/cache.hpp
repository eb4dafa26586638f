#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace kschur::cache {

/// Environment variable naming the on-disk cache directory. The value
/// "off" disables disk caching.
inline constexpr const char* kEnvVar = "KSCHUR_CACHE_DIR";

/// Bumped whenever the file layout changes; part of every cache key.
inline constexpr int kFormatVersion = 1;

/// $KSCHUR_CACHE_DIR, else $XDG_CACHE_HOME/kschur, else ~/.cache/kschur.
/// Empty when caching is disabled or no home directory is known.
std::optional<std::filesystem::path> default_dir();

/// Current directory used for reads and writes (initially default_dir()).
std::optional<std::filesystem::path> dir();
/// Overrides the directory; nullopt disables the disk cache.
void set_dir(std::optional<std::filesystem::path> d);

struct Stats {
  std::size_t files = 0;
  std::uintmax_t bytes = 0;
  std::size_t corrupt_detected = 0;  ///< files rejected this process
};
Stats stats();
/// Removes every cache file written by this library from dir().
std::size_t clear();

/// 64-bit FNV-1a over the bytes, as 16 lowercase hex digits.
std::string checksum(std::string_view bytes);

/// Reads a cache file. Returns nothing when caching is off or the file
/// does not exist.
std::optional<std::string> read(const std::string& name);
/// Writes atomically (temp file + rename). Silently skipped when off or
/// when the directory cannot be created.
void write(const std::string& name, const std::string& contents);
/// Notes that a file failed validation and removes it.
void reject(const std::string& name);

}  // namespace kschur::cache
