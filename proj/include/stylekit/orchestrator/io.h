#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace stylekit::orchestrator {

// Throws ConfigError when the file cannot be read.
std::string ReadFile(const std::filesystem::path& path);

// Writes to a sibling temp file and renames it over `path`, so readers never
// see a half-written file.
void WriteFileAtomic(const std::filesystem::path& path, std::string_view content);

// Exclusive per-directory run lock, released on destruction. Throws
// ConfigError when another run holds it.
class RunLock {
 public:
  explicit RunLock(const std::filesystem::path& dir);
  ~RunLock();
  RunLock(const RunLock&) = delete;
  RunLock& operator=(const RunLock&) = delete;

 private:
  std::filesystem::path path_;
};

}  // namespace stylekit::orchestrator
