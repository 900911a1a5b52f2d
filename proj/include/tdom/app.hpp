#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "tdom/cache.hpp"
#include "tdom/record.hpp"
#include "tdom/theory.hpp"

namespace tdom::app {

enum ExitCode : int { ok = 0, mismatch = 1, bad_input = 2, cap_exceeded = 3 };

struct Options {
  Budget budget;
  bool use_cache = true;
  std::string cache_path;  // empty: ResultCache::default_path()
  bool table = false;
  unsigned jobs = 0;  // 0: hardware concurrency
  bool all = false;   // scan: also report non-members
};

class Context {
 public:
  Context(Options opts, std::ostream& out, std::ostream& err);
  const Options& options() const { return opts_; }
  ResultCache* cache() { return cache_.get(); }
  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }
  void emit(const ResultRecord& r);  // JSON line, or a table row in table mode
  void emit(const nlohmann::json& j);

 private:
  Options opts_;
  std::unique_ptr<ResultCache> cache_;
  std::ostream& out_;
  std::ostream& err_;
  bool header_done_ = false;
};

// Exact solve of one instance, consulting and updating the cache when one is given.
ResultRecord solve(const Descriptor& d, Quantity q, const Budget& budget, ResultCache* cache);

struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};
// Proven interval for q on d, from the bound engine.
Interval proven_interval(const Descriptor& d, Quantity q);

int cmd_solve(Context& cx, const std::string& quantity, const std::string& descriptor);
int cmd_bounds(Context& cx, const std::string& descriptor, const std::string& quantity);
int cmd_construct(Context& cx, const std::string& name, const std::string& param, std::int64_t m);
int cmd_witness_thm6(Context& cx, std::int64_t j, std::uint64_t scan_limit);
int cmd_witness_prop1(Context& cx, int family, std::int64_t p1, std::int64_t p2);
int cmd_conjecture(Context& cx, const std::string& descriptor);
int cmd_jacobsthal(Context& cx, const std::string& arg);
int cmd_reproduce(Context& cx, const std::string& suite);
int cmd_scan(Context& cx, const std::string& target, const std::string& range);

// "n" or "a..b" (inclusive).
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s);

// Runs f, mapping library exceptions to exit codes with a message on err.
int guarded(std::ostream& err, const std::function<int()>& f);

nlohmann::json to_json(const theory::WitnessN& w);
nlohmann::json to_json(const theory::Prop1Witness& w);

}  // namespace tdom::app
