#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

#include "tdom/record.hpp"

namespace tdom {

// Append-only JSON-lines store keyed by (canonical descriptor, quantity).
// An optimal record may supersede a non-optimal one, never the reverse; among
// records of equal standing the last one appended wins. Records written by a
// different tool version, or whose witness no longer verifies, are ignored.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path);

  // Default location: $TDOM_CACHE, else $XDG_CACHE_HOME/tdom/results.jsonl, else ~/.cache/...
  static std::filesystem::path default_path();

  std::optional<ResultRecord> lookup(const std::string& descriptor, const std::string& quantity) const;
  // Returns false when an existing optimal record made the write unnecessary.
  bool store(const ResultRecord& r);

  const std::filesystem::path& path() const { return path_; }

 private:
  std::optional<ResultRecord> best_locked(int fd, const std::string& descriptor, const std::string& quantity) const;

  std::filesystem::path path_;
  mutable std::mutex mu_;
};

}  // namespace tdom
