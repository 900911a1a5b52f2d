#include "tdom/app.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <condition_variable>
#include <exception>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace tdom::app {

using nlohmann::json;

namespace {

// Runs work(i) for i in [0, count) on a pool and hands results to sink in index order.
template <class T, class Work, class Sink>
void ordered_map(std::size_t count, unsigned jobs, Work work, Sink sink) {
  struct Slot {
    bool done = false;
    T value{};
    std::exception_ptr error;
  };
  std::vector<Slot> slots(count);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      Slot s;
      try {
        s.value = work(i);
      } catch (...) {
        s.error = std::current_exception();
      }
      s.done = true;
      std::lock_guard lock(mu);
      slots[i] = std::move(s);
      cv.notify_all();
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<std::jthread> pool;
  for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
  std::exception_ptr first_error;
  for (std::size_t i = 0; i < count; ++i) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return slots[i].done; });
    Slot s = std::move(slots[i]);
    lock.unlock();
    if (s.error) {
      if (!first_error) first_error = s.error;
      next = count;  // stop handing out work
      continue;
    }
    if (!first_error) sink(i, std::move(s.value));
  }
  pool.clear();
  if (first_error) std::rethrow_exception(first_error);
}

unsigned job_count(const Options& o) {
  if (o.jobs) return o.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::int64_t ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

// Clique partition in the vertex numbering of d.build().
CliquePartition cliques_for(const Descriptor& d) {
  if (!d.is_ucg()) return clique_partition(d.product_spec());
  const auto crt = crt_isomorphism(std::get<UcgDescriptor>(d.value).n);
  std::vector<std::uint32_t> residue_of(crt.image.size());
  for (std::size_t x = 0; x < crt.image.size(); ++x)
    residue_of[crt.spec.index_of(crt.image[x])] = static_cast<std::uint32_t>(x);
  CliquePartition p = clique_partition(crt.spec);
  for (auto& c : p.cliques) {
    for (auto& v : c) v = residue_of[v];
    std::sort(c.begin(), c.end());
  }
  return p;
}

std::string to_lower_copy(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string witness_text(const json& w) {
  std::string s = w.dump();
  return s.size() > 60 ? s.substr(0, 57) + "..." : s;
}

}  // namespace

Context::Context(Options opts, std::ostream& out, std::ostream& err) : opts_(std::move(opts)), out_(out), err_(err) {
  if (opts_.use_cache)
    cache_ = std::make_unique<ResultCache>(opts_.cache_path.empty() ? ResultCache::default_path()
                                                                     : std::filesystem::path(opts_.cache_path));
}

void Context::emit(const ResultRecord& r) {
  if (!opts_.table) {
    out_ << to_line(r) << '\n';
    return;
  }
  if (!header_done_) {
    out_ << std::left << std::setw(36) << "descriptor" << std::setw(8) << "qty" << std::right << std::setw(8)
         << "value" << std::setw(8) << "lo" << std::setw(8) << "hi" << std::setw(6) << "opt" << "  " << std::left
         << std::setw(18) << "method" << std::right << std::setw(9) << "ms" << "  witness\n";
    header_done_ = true;
  }
  const json j = to_json(r, r.descriptor.rfind("ucg:", 0) == 0);
  out_ << std::left << std::setw(36) << r.descriptor << std::setw(8) << r.quantity << std::right << std::setw(8)
       << r.value << std::setw(8) << r.lo << std::setw(8) << r.hi << std::setw(6) << (r.optimal ? "yes" : "no")
       << "  " << std::left << std::setw(18) << r.method << std::right << std::setw(9) << r.elapsed_ms << "  "
       << witness_text(j["witness"]) << '\n';
}

void Context::emit(const json& j) {
  if (!opts_.table) {
    out_ << j.dump() << '\n';
    return;
  }
  for (const auto& [k, v] : j.items()) out_ << std::left << std::setw(20) << k << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  out_ << '\n';
}

Interval proven_interval(const Descriptor& d, Quantity q) {
  const ProductSpec spec = d.product_spec();
  const auto nv = static_cast<std::int64_t>(spec.vertex_count());
  if (q == Quantity::upper) {
    const auto r = theory::upper_bounds(spec);
    return {r.lo, r.hi};
  }
  const auto r = d.is_ucg() ? theory::ucg_gamma_bounds(std::get<UcgDescriptor>(d.value).n) : theory::gamma_bounds(spec);
  if (q == Quantity::gamma) return {r.lo, r.hi};
  // γ_t >= γ, and γ_t >= 2 without isolated vertices; the diagonal set and
  // the consecutive residues bound γ_t from above.
  Interval iv{std::max<std::int64_t>(r.lo, 2), nv};
  for (const auto& p : r.provenance)
    if ((p.tag == "lemma3" || p.tag == "g_upper") && p.side != theory::Side::lower) iv.hi = std::min(iv.hi, p.value);
  return iv;
}

ResultRecord solve(const Descriptor& d, Quantity q, const Budget& budget, ResultCache* cache) {
  const std::string key = d.canonical();
  const std::string qs(to_string(q));
  if (cache) {
    if (auto hit = cache->lookup(key, qs); hit && hit->optimal && (!budget.deterministic || hit->deterministic)) {
      hit->extra["cached"] = true;
      return *hit;
    }
  }
  const auto t0 = std::chrono::steady_clock::now();
  const Graph g = d.build();
  SolveResult s;
  switch (q) {
    case Quantity::gamma:
      s = (!d.is_ucg() && !budget.deterministic) ? gamma_product(d.product_spec(), budget) : gamma_exact(g, budget);
      break;
    case Quantity::gamma_total:
      s = gamma_total_exact(g, budget);
      break;
    case Quantity::upper: {
      UpperOptions opts;
      opts.cliques = cliques_for(d);
      s = gamma_upper_exact(g, budget, opts);
      break;
    }
  }
  Interval iv = proven_interval(d, q);
  const auto value = static_cast<std::int64_t>(s.value);
  if (s.optimal) {
    if (value < iv.lo || value > iv.hi)
      throw ConsistencyError(key + ": solver value " + std::to_string(value) + " outside proven [" +
                             std::to_string(iv.lo) + ", " + std::to_string(iv.hi) + "]");
    iv = {value, value};
  } else if (q == Quantity::upper) {
    iv.lo = std::max(iv.lo, value);
  } else {
    iv.hi = std::min(iv.hi, value);
  }

  ResultRecord r;
  r.descriptor = key;
  r.quantity = qs;
  r.value = value;
  r.lo = iv.lo;
  r.hi = iv.hi;
  r.witness = witness_labels(g, s.witness);
  r.optimal = s.optimal;
  r.method = std::string(to_string(s.method));
  r.elapsed_ms = ms_since(t0);
  r.nodes = s.nodes;
  r.deterministic = budget.deterministic;
  r.tool_version = std::string(tool_version());
  if (!passes_checker(g, q, s.witness)) throw ConsistencyError(key + ": solver witness fails the checker");
  if (cache) cache->store(r);
  return r;
}

int cmd_solve(Context& cx, const std::string& quantity, const std::string& descriptor) {
  const Quantity q = parse_quantity(quantity);
  const Descriptor d = parse_descriptor(descriptor);
  cx.emit(solve(d, q, cx.options().budget, cx.cache()));
  return ok;
}

int cmd_bounds(Context& cx, const std::string& descriptor, const std::string& quantity) {
  const Quantity q = parse_quantity(quantity);
  if (q == Quantity::gamma_total) throw PreconditionError("bounds supports gamma and upper");
  const Descriptor d = parse_descriptor(descriptor);
  const auto t0 = std::chrono::steady_clock::now();
  theory::BoundReport b = q == Quantity::upper ? theory::upper_bounds(d.product_spec())
                          : d.is_ucg()         ? theory::ucg_gamma_bounds(std::get<UcgDescriptor>(d.value).n)
                                               : theory::gamma_bounds(d.product_spec());
  ResultRecord r;
  r.descriptor = d.canonical();
  r.quantity = std::string(to_string(q));
  r.value = b.lo;
  r.lo = b.lo;
  r.hi = b.hi;
  r.optimal = b.exact;
  r.method = "bounds";
  r.elapsed_ms = ms_since(t0);
  r.tool_version = std::string(tool_version());
  json prov = json::array();
  for (const auto& p : b.provenance) {
    const char* side = p.side == theory::Side::lower ? "lower" : p.side == theory::Side::upper ? "upper" : "exact";
    prov.push_back({{"tag", p.tag}, {"side", side}, {"value", p.value}, {"note", p.note}});
  }
  r.extra["provenance"] = std::move(prov);
  if (b.conjectured) r.extra["conjectured"] = *b.conjectured;
  cx.emit(r);
  return ok;
}

int cmd_construct(Context& cx, const std::string& raw_name, const std::string& param, std::int64_t m) {
  const std::string name = to_lower_copy(raw_name);
  const auto t0 = std::chrono::steady_clock::now();
  theory::ConstructionResult c;
  Descriptor d;
  if (name == "consecutive") {
    d = param.rfind("ucg:", 0) == 0 ? parse_descriptor(param) : parse_descriptor("ucg:" + param);
    if (!d.is_ucg()) throw ParseError("consecutive expects n or ucg:<n>");
    c = theory::consecutive_residue_set(std::get<UcgDescriptor>(d.value).n);
  } else {
    d = parse_descriptor(param);
    if (d.is_ucg()) throw PreconditionError(name + " expects a product descriptor");
    const ProductSpec spec = d.product_spec();
    if (name == "diagonal")
      c = theory::diagonal_set(spec, m);
    else if (name == "theorem3")
      c = theory::theorem3_set(spec);
    else if (name == "cube-corner")
      c = theory::cube_corner_set(spec);
    else if (name == "prop2")
      c = theory::prop2_set(spec);
    else
      throw ParseError("unknown construction '" + raw_name + "' (consecutive, diagonal, theorem3, cube-corner, prop2)");
  }
  const Quantity q = c.kind == theory::ConstructionKind::total_dominating ? Quantity::gamma_total
                     : c.kind == theory::ConstructionKind::dominating     ? Quantity::gamma
                                                                          : Quantity::upper;
  const auto size = static_cast<std::int64_t>(c.vertex_set.count());
  Interval iv = proven_interval(d, q);
  if (q == Quantity::upper)
    iv.lo = std::max(iv.lo, size);
  else
    iv.hi = std::min(iv.hi, size);

  ResultRecord r;
  r.descriptor = d.canonical();
  r.quantity = std::string(to_string(q));
  r.value = size;
  r.lo = iv.lo;
  r.hi = iv.hi;
  r.witness = witness_labels(c.graph, c.vertex_set);
  r.optimal = false;
  r.method = "construction";
  r.elapsed_ms = ms_since(t0);
  r.tool_version = std::string(tool_version());
  r.extra["construction"] = name;
  r.extra["kind"] = std::string(theory::to_string(c.kind));
  r.extra["verified"] = c.verified;
  cx.emit(r);
  return c.verified ? ok : mismatch;
}

json to_json(const theory::WitnessN& w) {
  json j = {{"n", w.n},
            {"omega", w.omega},
            {"q", w.q},
            {"k", w.k},
            {"primes", w.primes},
            {"D", w.D},
            {"D_size", w.D.size()},
            {"y", w.y},
            {"z", w.z},
            {"run_length", w.run_length},
            {"g_lower", w.run_length + 1},
            {"run_verified", w.run_verified},
            {"symbolic_verified", w.symbolic_verified},
            {"verified", w.verified()},
            {"tool_version", tool_version()}};
  j["scan_verified"] = w.scan_verified ? json(*w.scan_verified) : json(nullptr);
  j["g_exact"] = w.g_exact ? json(*w.g_exact) : json(nullptr);
  return j;
}

json to_json(const theory::Prop1Witness& w) {
  return {{"family", w.family},         {"p1", w.p1},           {"p2", w.p2},
          {"n", w.n},                   {"x", w.x},             {"run_length", w.run_length},
          {"g_lower", w.g_lower},       {"g_exact", w.g_exact}, {"gamma", w.gamma},
          {"dominating", w.dominating}, {"verified", w.verified}, {"tool_version", tool_version()}};
}

int cmd_witness_thm6(Context& cx, std::int64_t j, std::uint64_t scan_limit) {
  theory::WitnessOptions opts;
  opts.scan_limit = scan_limit;
  const auto t0 = std::chrono::steady_clock::now();
  const auto w = theory::thm6_witness(j, opts);
  json out = to_json(w);
  out["j"] = j;
  out["elapsed_ms"] = ms_since(t0);
  cx.emit(out);
  return w.verified() ? ok : mismatch;
}

int cmd_witness_prop1(Context& cx, int family, std::int64_t p1, std::int64_t p2) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto w = theory::prop1_witness(family, p1, p2);
  json out = to_json(w);
  out["elapsed_ms"] = ms_since(t0);
  cx.emit(out);
  return w.verified ? ok : mismatch;
}

int cmd_conjecture(Context& cx, const std::string& descriptor) {
  const Descriptor input = parse_descriptor(descriptor);
  const ProductSpec spec = input.product_spec();
  const Descriptor d{spec};
  const auto rec = theory::conjecture_check(spec, cx.options().budget);
  const Graph g = d.build();

  ResultRecord r;
  r.descriptor = d.canonical();
  r.quantity = "upper";
  r.value = static_cast<std::int64_t>(rec.exact.value);
  const Interval iv = proven_interval(d, Quantity::upper);
  r.lo = rec.exact.optimal ? r.value : std::max(iv.lo, r.value);
  r.hi = rec.exact.optimal ? r.value : iv.hi;
  r.witness = witness_labels(g, rec.exact.witness);
  r.optimal = rec.exact.optimal;
  r.method = std::string(to_string(rec.exact.method));
  r.elapsed_ms = static_cast<std::int64_t>(rec.exact.elapsed_ms);
  r.nodes = rec.exact.nodes;
  r.tool_version = std::string(tool_version());
  r.extra["input"] = input.canonical();
  r.extra["conjectured"] = rec.conjectured;
  r.extra["agrees"] = rec.agrees;
  r.extra["packing_violated"] = rec.packing_violated;
  r.extra["minimal_sets_seen"] = rec.minimal_sets_seen;
  cx.emit(r);
  if (rec.packing_violated) return mismatch;
  return (rec.exact.optimal && !rec.agrees) ? mismatch : ok;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  auto number = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || p != part.data() + part.size()) throw ParseError("bad range '" + s + "'");
    return v;
  };
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const auto v = number(s);
    return {v, v};
  }
  const auto a = number(std::string_view(s).substr(0, dots));
  const auto b = number(std::string_view(s).substr(dots + 2));
  if (a > b) throw ParseError("empty range '" + s + "'");
  return {a, b};
}

int cmd_jacobsthal(Context& cx, const std::string& arg) {
  const auto [a, b] = parse_range(arg);
  if (a < 1) throw PreconditionError("jacobsthal requires n >= 1");
  for (std::int64_t n = a; n <= b; ++n) {
    const auto r = numth::jacobsthal_run(static_cast<std::uint64_t>(n));
    cx.emit(json{{"n", n}, {"g", r.value}, {"run_start", r.run_start}, {"run_length", r.run_length}});
  }
  return ok;
}

namespace {

struct SuiteRow {
  std::string descriptor;
  std::int64_t formula = 0;
  std::optional<std::int64_t> solver;  // nullopt when the solve did not finish
};

std::vector<ProductSpec> small_upper_specs(std::uint64_t max_vertices, std::size_t max_t) {
  std::vector<Factor> factors;
  for (std::int64_t b = 2; b <= static_cast<std::int64_t>(max_vertices); ++b)
    for (std::int64_t a = 1; a * b <= static_cast<std::int64_t>(max_vertices); ++a) factors.push_back(Factor::make(a, b));
  std::sort(factors.begin(), factors.end());
  std::vector<ProductSpec> out;
  std::vector<Factor> cur;
  auto rec = [&](auto&& self, std::size_t from, std::uint64_t order) -> void {
    if (!cur.empty()) out.push_back(ProductSpec::make(cur));
    if (cur.size() == max_t) return;
    for (std::size_t i = from; i < factors.size(); ++i) {
      const auto o = static_cast<std::uint64_t>(factors[i].order());
      if (order * o > max_vertices) continue;
      cur.push_back(factors[i]);
      self(self, i, order * o);
      cur.pop_back();
    }
  };
  rec(rec, 0, 1);
  return out;
}

}  // namespace

int cmd_reproduce(Context& cx, const std::string& suite) {
  struct Task {
    Descriptor d;
    Quantity q;
    std::int64_t formula;
  };
  std::vector<Task> tasks;
  auto ucg = [](std::int64_t n) { return Descriptor{UcgDescriptor{n}}; };
  if (suite == "eq7") {
    for (std::int64_t n = 2; n <= 500; ++n) {
      const auto u = static_cast<std::uint64_t>(n);
      if (numth::is_squarefree(u) && numth::omega(u) <= 3) tasks.push_back({ucg(n), Quantity::gamma, theory::eq7_value(n)});
    }
  } else if (suite == "thm1") {
    for (std::int64_t a = 2; a <= 5; ++a)
      for (std::int64_t b = a; b <= 5; ++b) {
        auto two = ProductSpec::make({Factor::make(1, a), Factor::make(1, b)});
        tasks.push_back({Descriptor{two}, Quantity::gamma, theory::mekis_bound(two).lo});
        for (std::int64_t c = b; c <= 5; ++c) {
          auto three = ProductSpec::make({Factor::make(1, a), Factor::make(1, b), Factor::make(1, c)});
          tasks.push_back({Descriptor{three}, Quantity::gamma, theory::mekis_bound(three).lo});
        }
      }
  } else if (suite == "thm4") {
    for (std::int64_t n = 2; n <= 200; ++n) {
      const auto u = static_cast<std::uint64_t>(n);
      if (!numth::is_squarefree(u) && numth::omega(u) <= 3)
        tasks.push_back({ucg(n), Quantity::gamma, static_cast<std::int64_t>(numth::jacobsthal(u))});
    }
  } else if (suite == "upperdom-small") {
    for (const auto& spec : small_upper_specs(27, 3))
      tasks.push_back({Descriptor{spec}, Quantity::upper,
                       static_cast<std::int64_t>(spec.vertex_count()) / spec.factors[0].b});
  } else if (suite == "gammat") {
    for (std::int64_t n = 2; n <= 100; ++n) {
      const auto u = static_cast<std::uint64_t>(n);
      if (numth::omega(u) <= 3)
        tasks.push_back({ucg(n), Quantity::gamma_total, static_cast<std::int64_t>(numth::jacobsthal(u))});
    }
  } else {
    throw ParseError("unknown suite '" + suite + "' (eq7, thm1, thm4, upperdom-small, gammat)");
  }

  std::vector<std::string> offenders;
  cx.out() << "descriptor,formula,solver,match\n";
  ordered_map<SuiteRow>(
      tasks.size(), job_count(cx.options()),
      [&](std::size_t i) {
        const auto& t = tasks[i];
        const auto r = solve(t.d, t.q, cx.options().budget, cx.cache());
        SuiteRow row{t.d.canonical(), t.formula, std::nullopt};
        if (r.optimal) row.solver = r.value;
        return row;
      },
      [&](std::size_t, SuiteRow row) {
        const bool match = row.solver && *row.solver == row.formula;
        cx.out() << row.descriptor << ',' << row.formula << ',' << (row.solver ? std::to_string(*row.solver) : "undecided")
                 << ',' << (match ? "true" : "false") << '\n';
        if (!match) offenders.push_back(row.descriptor);
      });
  cx.out().flush();
  if (!offenders.empty()) {
    cx.err() << "reproduce " << suite << ": " << offenders.size() << " mismatch(es):";
    for (const auto& o : offenders) cx.err() << ' ' << o;
    cx.err() << '\n';
    return mismatch;
  }
  return ok;
}

int cmd_scan(Context& cx, const std::string& target_in, const std::string& range) {
  const std::string target = to_lower_copy(target_in);
  if (target != "m" && target != "mt") throw ParseError("scan target must be M or Mt");
  const Quantity q = target == "m" ? Quantity::gamma : Quantity::gamma_total;
  const auto [a, b] = parse_range(range);
  const std::int64_t first = std::max<std::int64_t>(a, 2);
  if (b < first) return ok;

  ordered_map<std::optional<json>>(
      static_cast<std::size_t>(b - first + 1), job_count(cx.options()),
      [&](std::size_t i) -> std::optional<json> {
        const std::int64_t n = first + static_cast<std::int64_t>(i);
        const auto g = static_cast<std::int64_t>(numth::jacobsthal(static_cast<std::uint64_t>(n)));
        const Descriptor d{UcgDescriptor{n}};
        json base = {{"target", target == "m" ? "M" : "Mt"}, {"n", n}, {"g", g}};
        // γ_t >= γ >= lo, so a proven lo = g settles non-membership for both sets.
        if (const auto iv = proven_interval(d, Quantity::gamma); iv.lo >= g) {
          if (!cx.options().all) return std::nullopt;
          base["status"] = "not_member";
          base["reason"] = "proven bound gamma >= g(n)";
          return base;
        }
        const auto r = solve(d, q, cx.options().budget, cx.cache());
        if (r.value < g) {
          base["status"] = "member";
          base["record"] = to_json(r, true);
          return base;
        }
        if (r.optimal) {
          if (!cx.options().all) return std::nullopt;
          base["status"] = "not_member";
          base["reason"] = "exact value equals g(n)";
          base["value"] = r.value;
          return base;
        }
        base["status"] = "undecided";
        base["reason"] = "budget exhausted with best value " + std::to_string(r.value);
        return base;
      },
      [&](std::size_t, std::optional<json> j) {
        if (j) cx.emit(*j);
      });
  return ok;
}

int guarded(std::ostream& err, const std::function<int()>& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return bad_input;
  } catch (const PreconditionError& e) {
    err << "invalid input: " << e.what() << '\n';
    return bad_input;
  } catch (const CapExceeded& e) {
    err << "resource cap exceeded: " << e.what() << '\n';
    return cap_exceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return mismatch;
  }
}

}  // namespace tdom::app
