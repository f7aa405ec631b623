#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "stylekit/core/types.h"

namespace stylekit::profile {

// Content hash (SHA-256 of the canonical serialization) pinning one exact
// profile version.
std::string ProfileHash(const StyleProfile& profile);

// Validated profiles keyed by style name. Thread-safe.
class ProfileStore {
 public:
  ProfileStore() = default;
  ProfileStore(const ProfileStore& other);
  ProfileStore& operator=(const ProfileStore& other);

  // Throws InvariantViolation or DuplicateStyle.
  void Add(const StyleProfile& profile);
  bool Contains(const std::string& style) const;
  // Throws PreconditionError when the style is absent.
  StyleProfile Get(const std::string& style) const;
  std::optional<StyleProfile> Find(const std::string& style) const;
  std::string Hash(const std::string& style) const;
  std::size_t size() const;

  // Sorted by style name.
  std::vector<StyleProfile> All() const;
  std::map<std::string, std::string> Hashes() const;

  // JSONL, one profile per line, sorted by style name.
  std::string Dump() const;
  static ProfileStore Parse(std::string_view jsonl);

 private:
  mutable std::mutex mu_;
  std::map<std::string, StyleProfile> profiles_;
};

}  // namespace stylekit::profile
