#include "tdom/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <cstring>
#include <vector>

namespace tdom {

namespace {

class LockedFile {
 public:
  LockedFile(const std::filesystem::path& p, bool exclusive) {
    fd_ = ::open(p.c_str(), O_RDWR | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    if (fd_ < 0) throw Error("cannot open cache " + p.string() + ": " + std::strerror(errno));
    if (::flock(fd_, exclusive ? LOCK_EX : LOCK_SH) != 0) {
      ::close(fd_);
      throw Error("cannot lock cache " + p.string());
    }
  }
  ~LockedFile() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  LockedFile(const LockedFile&) = delete;
  LockedFile& operator=(const LockedFile&) = delete;
  int fd() const { return fd_; }

 private:
  int fd_ = -1;
};

std::string read_all(int fd) {
  std::string data;
  char buf[1 << 16];
  ::lseek(fd, 0, SEEK_SET);
  for (;;) {
    const auto n = ::read(fd, buf, sizeof buf);
    if (n <= 0) break;
    data.append(buf, static_cast<std::size_t>(n));
  }
  return data;
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
}

std::filesystem::path ResultCache::default_path() {
  if (const char* p = std::getenv("TDOM_CACHE"); p && *p) return p;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "tdom/results.jsonl";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache/tdom/results.jsonl";
  return "tdom-results.jsonl";
}

std::optional<ResultRecord> ResultCache::best_locked(int fd, const std::string& descriptor,
                                                     const std::string& quantity) const {
  const std::string data = read_all(fd);
  std::vector<ResultRecord> optimal, partial;
  std::size_t start = 0;
  while (start < data.size()) {
    auto end = data.find('\n', start);
    if (end == std::string::npos) end = data.size();
    const std::string_view line(data.data() + start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    // Cheap filter before parsing every line.
    if (line.find(descriptor) == std::string_view::npos) continue;
    ResultRecord r;
    try {
      r = record_from_json(nlohmann::json::parse(line));
    } catch (const std::exception&) {
      continue;  // a torn or foreign line
    }
    if (r.descriptor != descriptor || r.quantity != quantity || r.tool_version != tool_version()) continue;
    (r.optimal ? optimal : partial).push_back(std::move(r));
  }
  // Newest first within each standing; a record that fails re-verification is skipped,
  // so it can neither be served nor shadow an older sound one.
  for (auto* group : {&optimal, &partial})
    for (auto it = group->rbegin(); it != group->rend(); ++it)
      if (verify_record(*it).empty()) return std::move(*it);
  return std::nullopt;
}

std::optional<ResultRecord> ResultCache::lookup(const std::string& descriptor, const std::string& quantity) const {
  std::lock_guard lock(mu_);
  LockedFile f(path_, false);
  return best_locked(f.fd(), descriptor, quantity);
}

bool ResultCache::store(const ResultRecord& r) {
  std::lock_guard lock(mu_);
  LockedFile f(path_, true);
  if (auto cur = best_locked(f.fd(), r.descriptor, r.quantity); cur && cur->optimal && !r.optimal) return false;
  const std::string line = to_line(r) + "\n";
  if (::write(f.fd(), line.data(), line.size()) != static_cast<ssize_t>(line.size()))
    throw Error("short write to cache " + path_.string());
  return true;
}

}  // namespace tdom
