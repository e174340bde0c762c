#include "cycleprefix/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "cycleprefix/containers.hpp"
#include "cycleprefix/oracle.hpp"
#include "cycleprefix/routing.hpp"

namespace cycleprefix::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kMaxCounterexamples = 5;
constexpr std::uint64_t kExhaustivePairBudget = 200'000;

enum class Format { Text, Dot, Jsonl, Csv };

struct Options {
  std::optional<int> delta;
  std::optional<int> dee;
  std::optional<int> r;
  std::string format;
  std::uint64_t max_vertices = 2520;
  std::uint64_t seed = 1;
  bool quiet = false;
  bool timing = false;

  // subcommand arguments
  std::string x;
  std::string y;
  std::string mode;
  std::string suite;
  std::string distances_from;
  std::uint64_t samples = 0;
  bool exhaustive = false;
  bool measure = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format format_of(const Options& o, Format fallback, std::initializer_list<Format> allowed) {
  Format f = fallback;
  if (o.format == "text") f = Format::Text;
  else if (o.format == "dot") f = Format::Dot;
  else if (o.format == "jsonl") f = Format::Jsonl;
  else if (o.format == "csv") f = Format::Csv;
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end())
    throw UsageError("format '" + o.format + "' is not available for this command");
  return f;
}

NetworkParams instance_params(const Options& o) {
  if (!o.delta || !o.dee) throw UsageError("--delta and --dee are required");
  return NetworkParams(*o.delta, *o.dee, o.r.value_or(0));
}

json params_json(const NetworkParams& p) { return json{{"delta", p.delta()}, {"dee", p.dee()}, {"r", p.r()}}; }

std::string vtext(const Vertex& v, const NetworkParams& p) { return v.to_string(p); }

json vertices_json(const Walk& w, const NetworkParams& p) {
  json a = json::array();
  for (const auto& v : w.vertices) a.push_back(vtext(v, p));
  return a;
}

json ops_json(const Walk& w, const NetworkParams& p) {
  json a = json::array();
  for (const auto& op : hop_operations(w, p)) a.push_back(op.to_string());
  return a;
}

std::string join_vertices(const Walk& w, const NetworkParams& p) {
  std::string s;
  for (const auto& v : w.vertices) {
    if (!s.empty()) s += ' ';
    s += vtext(v, p);
  }
  return s;
}

struct Record {
  Record(std::string cmd, std::string name, std::optional<NetworkParams> p)
      : command(std::move(cmd)), suite(std::move(name)), params(std::move(p)) {}

  std::string command;
  std::string suite;
  std::optional<NetworkParams> params;
  json inputs = json::object();
  json outputs = json::object();
  bool pass = true;
  std::optional<double> elapsed_ms;
};

json to_json(const Record& r) {
  json j;
  j["schema"] = kSchemaVersion;
  j["command"] = r.command;
  if (!r.suite.empty()) j["suite"] = r.suite;
  if (r.params) j["params"] = params_json(*r.params);
  j["inputs"] = r.inputs;
  j["outputs"] = r.outputs;
  j["pass"] = r.pass;
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// All output goes through one writer so record order never depends on
// worker scheduling.
class Writer {
 public:
  Writer(std::ostream& out, Format fmt, const Options& o) : out_(out), fmt_(fmt), quiet_(o.quiet) {}

  Format format() const { return fmt_; }
  std::ostream& raw() { return out_; }

  void text(const std::string& line) {
    if (fmt_ == Format::Text && !quiet_) out_ << line << '\n';
  }

  void record(const Record& r) {
    if (fmt_ == Format::Jsonl) {
      out_ << to_json(r).dump() << '\n';
      return;
    }
    if (quiet_ && r.pass) return;
    out_ << (r.pass ? "PASS " : "FAIL ") << r.command;
    if (!r.suite.empty()) out_ << ' ' << r.suite;
    if (r.params) out_ << ' ' << r.params->to_string();
    for (const auto& [key, value] : r.outputs.items()) {
      if (key == "counterexamples") continue;
      out_ << ' ' << key << '=' << scalar_text(value);
    }
    if (r.elapsed_ms) out_ << " elapsed_ms=" << *r.elapsed_ms;
    out_ << '\n';
    if (auto it = r.outputs.find("counterexamples"); it != r.outputs.end())
      for (const auto& c : *it) out_ << "  counterexample " << c.dump() << '\n';
  }

 private:
  std::ostream& out_;
  Format fmt_;
  bool quiet_;
};

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void finish(Record& r, const Stopwatch& sw, const Options& o) {
  if (o.timing) r.elapsed_ms = sw.ms();
}

std::vector<Vertex> all_vertices(const oracle::ExplicitGraph& g) {
  std::vector<Vertex> vs(g.size());
  oracle::parallel_for(vs.size(), [&](std::size_t u) { vs[u] = g.vertex(static_cast<std::uint32_t>(u)); });
  return vs;
}

// Distances to `target` from every vertex, over in-arcs.
std::vector<int> reverse_bfs(const oracle::ExplicitGraph& g, std::uint32_t target) {
  std::vector<int> dist(g.size(), oracle::kUnreachable);
  std::deque<std::uint32_t> queue{target};
  dist[target] = 0;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto u : g.in(v))
      if (dist[u] == oracle::kUnreachable) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> sample_pairs(std::uint32_t n, std::uint64_t count,
                                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(count);
  while (pairs.size() < count) {
    auto u = pick(rng);
    auto v = pick(rng);
    if (u != v) pairs.emplace_back(u, v);
  }
  return pairs;
}

// ---------------------------------------------------------------- gen

int cmd_gen(const Options& o, std::ostream& out) {
  auto p = instance_params(o);
  Format fmt = format_of(o, Format::Dot, {Format::Dot, Format::Jsonl, Format::Csv});
  oracle::ExplicitGraph g(p, o.max_vertices);
  auto vs = all_vertices(g);

  if (!o.distances_from.empty()) {
    if (fmt == Format::Dot) throw UsageError("distance tables are exported as jsonl or csv");
    auto src = parse_vertex(o.distances_from, p);
    auto dist = g.bfs(g.index_of(src));
    if (fmt == Format::Csv) out << "src,dst,d\n";
    for (std::uint32_t v = 0; v < g.size(); ++v) {
      if (fmt == Format::Csv)
        out << vtext(src, p) << ',' << vtext(vs[v], p) << ',' << dist[v] << '\n';
      else
        out << json{{"src", vtext(src, p)}, {"dst", vtext(vs[v], p)}, {"d", dist[v]}}.dump() << '\n';
    }
    return kExitPass;
  }

  if (fmt == Format::Dot) {
    out << "digraph \"" << p.to_string() << "\" {\n";
    out << "  comment=\"delta=" << p.delta() << " dee=" << p.dee() << " r=" << p.r() << "\";\n";
  } else if (fmt == Format::Csv) {
    out << "src,dst,op,kind\n";
  }
  for (std::uint32_t u = 0; u < g.size(); ++u) {
    for (auto v : g.out(u)) {
      auto op = arc_between(vs[u], vs[v], p);
      if (!op) throw Error(ErrorKind::DomainError, "adjacency holds a non-arc");
      auto label = op->to_string();
      const char* kind = op->kind == ArcOp::Kind::Rotation ? "rotation" : "shift";
      auto a = vtext(vs[u], p);
      auto b = vtext(vs[v], p);
      switch (fmt) {
        case Format::Dot:
          out << "  \"" << a << "\" -> \"" << b << "\" [label=\"" << label << "\"];\n";
          break;
        case Format::Csv:
          out << a << ',' << b << ',' << label << ',' << kind << '\n';
          break;
        default:
          out << json{{"src", a}, {"dst", b}, {"op", label}, {"kind", kind}}.dump() << '\n';
      }
    }
  }
  if (fmt == Format::Dot) out << "}\n";
  return kExitPass;
}

// ---------------------------------------------------------------- params

int cmd_params(const Options& o, std::ostream& out) {
  Stopwatch sw;
  auto p = instance_params(o);
  Writer w(out, format_of(o, Format::Text, {Format::Text, Format::Jsonl}), o);
  Record rec{"params", "", p};
  auto n = vertex_count(p);
  rec.outputs["vertices"] = n;
  rec.outputs["degree"] = p.degree();
  rec.outputs["arcs"] = n * static_cast<std::uint64_t>(p.degree());
  rec.outputs["diameter_bound"] = p.dee() + p.r();
  rec.outputs["restricted_routing"] = p.dee() >= 2 * p.r() + 2;
  rec.outputs["exact_reach"] = p.dee() >= 2 * p.r() + 3;
  if (o.measure) rec.outputs["diameter"] = oracle::diameter(p, o.max_vertices);
  finish(rec, sw, o);
  w.record(rec);
  return kExitPass;
}

// ---------------------------------------------------------------- route

int cmd_route(const Options& o, std::ostream& out) {
  Stopwatch sw;
  auto p = instance_params(o);
  Writer w(out, format_of(o, Format::Text, {Format::Text, Format::Jsonl}), o);
  auto x = parse_vertex(o.x, p);
  auto y = parse_vertex(o.y, p);
  std::string mode = o.mode.empty() ? (p.r() == 0 ? "shortest" : "restricted") : o.mode;

  Walk walk;
  bool pass = true;
  if (mode == "shortest") {
    walk = shortest_path(x, y, p);
    pass = walk.length() == distance(x, y, p);
  } else if (mode == "restricted") {
    walk = restricted_route(x, y, p);
    pass = walk.length() <= p.dee() + p.r() && walk.has_distinct_vertices();
  } else {
    walk = reach_walk(x, y, p);
    pass = walk.length() == p.dee() + p.r();
  }
  pass = pass && is_valid_walk(walk, p) && walk.source() == x && walk.target() == y;

  Record rec{"route", "", p};
  rec.inputs = json{{"src", vtext(x, p)}, {"dst", vtext(y, p)}, {"mode", mode}};
  rec.outputs["length"] = walk.length();
  rec.outputs["vertices"] = vertices_json(walk, p);
  rec.outputs["ops"] = ops_json(walk, p);
  rec.pass = pass;
  finish(rec, sw, o);

  if (w.format() == Format::Jsonl) {
    w.record(rec);
  } else {
    std::string ops;
    for (const auto& op : rec.outputs["ops"]) ops += (ops.empty() ? "" : " ") + op.get<std::string>();
    w.text("mode: " + mode);
    w.text("length: " + std::to_string(walk.length()));
    w.text("vertices: " + join_vertices(walk, p));
    w.text("ops: " + ops);
    if (!pass) out << "FAIL route " << mode << " produced an invalid walk\n";
  }
  return pass ? kExitPass : kExitCheckFailed;
}

// ---------------------------------------------------------------- container

int cmd_container(const Options& o, std::ostream& out) {
  Stopwatch sw;
  auto p = instance_params(o);
  Writer w(out, format_of(o, Format::Text, {Format::Text, Format::Jsonl}), o);
  auto x = parse_vertex(o.x, p);
  auto y = parse_vertex(o.y, p);
  auto c = container(x, y, p);
  auto diag = oracle::verify_container(c, p);

  Record rec{"container", "", p};
  rec.inputs = json{{"src", vtext(x, p)}, {"dst", vtext(y, p)}};
  json paths = json::array();
  for (const auto& path : c.paths) {
    json entry;
    entry["i"] = path.vertices.at(1).front();
    entry["theta"] = vtext(path.vertices.at(path.vertices.size() - 2), p);
    entry["length"] = path.length();
    entry["vertices"] = vertices_json(path, p);
    paths.push_back(std::move(entry));
  }
  rec.outputs["width"] = diag.width;
  rec.outputs["length"] = c.length();
  rec.outputs["disjoint"] = diag.valid;
  rec.outputs["paths"] = paths;
  if (!diag.problems.empty()) rec.outputs["problems"] = diag.problems;
  rec.pass = diag.valid;
  finish(rec, sw, o);

  if (w.format() == Format::Jsonl) {
    w.record(rec);
  } else {
    w.text("container " + vtext(x, p) + " -> " + vtext(y, p) + " in " + p.to_string());
    for (const auto& path : c.paths) {
      std::ostringstream line;
      line << "  i=" << path.vertices.at(1).front() << " len=" << path.length()
           << " theta=" << vtext(path.vertices.at(path.vertices.size() - 2), p) << ": " << join_vertices(path, p);
      w.text(line.str());
    }
    w.text(std::string("disjoint: ") + (diag.valid ? "yes" : "no"));
    w.text("length: " + std::to_string(c.length()));
    for (const auto& problem : diag.problems) out << "FAIL container " << problem << '\n';
  }
  return diag.valid ? kExitPass : kExitCheckFailed;
}

// ---------------------------------------------------------------- verify

using Instances = std::vector<NetworkParams>;

Instances pick_instances(const Options& o, const std::function<bool(int, int, int)>& want,
                         std::initializer_list<int> default_r) {
  if (o.delta || o.dee) return {instance_params(o)};
  Instances list;
  std::vector<int> rs = o.r ? std::vector<int>{*o.r} : std::vector<int>(default_r);
  for (int r : rs)
    for (int delta = 2; delta <= 7; ++delta)
      for (int dee = 2; dee <= delta; ++dee) {
        if (r >= dee || !want(delta, dee, r)) continue;
        NetworkParams p(delta, dee, r);
        if (vertex_count(p) <= o.max_vertices) list.push_back(p);
      }
  return list;
}

bool in_list(int delta, int dee, std::initializer_list<std::pair<int, int>> list) {
  return std::find(list.begin(), list.end(), std::pair{delta, dee}) != list.end();
}

Record suite_distances(const NetworkParams& p, const Options& o) {
  Stopwatch sw;
  if (p.r() != 0) throw Error(ErrorKind::ParameterDomain, "the distance formula is defined for r = 0");
  oracle::ExplicitGraph g(p, o.max_vertices);
  auto vs = all_vertices(g);
  struct Slot {
    std::uint64_t mismatches = 0;
    json first;
  };
  std::vector<Slot> slots(g.size());
  oracle::parallel_for(g.size(), [&](std::size_t u) {
    auto d = g.bfs(static_cast<std::uint32_t>(u));
    for (std::uint32_t v = 0; v < g.size(); ++v) {
      int f = distance(vs[u], vs[v], p);
      if (f == d[v]) continue;
      if (slots[u].mismatches++ == 0)
        slots[u].first = json{{"src", vtext(vs[u], p)}, {"dst", vtext(vs[v], p)}, {"bfs", d[v]}, {"formula", f}};
    }
  });
  Record rec{"verify", "distances", p};
  std::uint64_t mismatches = 0;
  json ce = json::array();
  for (auto& s : slots) {
    mismatches += s.mismatches;
    if (s.mismatches && ce.size() < kMaxCounterexamples) ce.push_back(s.first);
  }
  rec.outputs["pairs"] = std::uint64_t{g.size()} * g.size();
  rec.outputs["mismatches"] = mismatches;
  if (!ce.empty()) rec.outputs["counterexamples"] = ce;
  rec.pass = mismatches == 0;
  finish(rec, sw, o);
  return rec;
}

Record suite_uniqueness(const NetworkParams& p, const Options& o) {
  Stopwatch sw;
  oracle::ExplicitGraph g(p, o.max_vertices);
  auto vs = all_vertices(g);
  struct Slot {
    std::uint64_t violations = 0;
    std::uint64_t max_count = 0;
    std::vector<std::uint32_t> first;
  };
  std::vector<Slot> slots(g.size());
  oracle::parallel_for(g.size(), [&](std::size_t u) {
    auto d = g.bfs(static_cast<std::uint32_t>(u));
    auto cnt = g.geodesic_counts(static_cast<std::uint32_t>(u), d);
    for (std::uint32_t v = 0; v < g.size(); ++v) {
      slots[u].max_count = std::max(slots[u].max_count, cnt[v]);
      if (cnt[v] == 1) continue;
      if (slots[u].violations++ < kMaxCounterexamples) slots[u].first.push_back(v);
    }
  });

  auto describe = [&](std::uint32_t u, std::uint32_t v) {
    auto paths = oracle::enumerate_geodesics(g, u, v, 8);
    json j{{"src", vtext(vs[u], p)}, {"dst", vtext(vs[v], p)}, {"geodesics", paths.size()}};
    json listed = json::array();
    for (const auto& path : paths) listed.push_back(join_vertices(path, p));
    j["paths"] = listed;
    return j;
  };

  // The remote vertex seen from the origin is the canonical non-unique pair.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> chosen;
  if (p.dee() >= 3 && p.dee() >= 2 * p.r() + 2) {
    auto origin = g.index_of(standard_origin(p));
    auto remote = g.index_of(remote_distance_witness(p).vertex);
    auto d = g.bfs(origin);
    if (g.geodesic_counts(origin, d)[remote] != 1) chosen.emplace_back(origin, remote);
  }
  std::uint64_t violations = 0;
  std::uint64_t max_count = 0;
  for (std::uint32_t u = 0; u < g.size(); ++u) {
    violations += slots[u].violations;
    max_count = std::max(max_count, slots[u].max_count);
    for (auto v : slots[u].first)
      if (chosen.size() < kMaxCounterexamples &&
          std::find(chosen.begin(), chosen.end(), std::pair{u, v}) == chosen.end())
        chosen.emplace_back(u, v);
  }

  Record rec{"verify", "uniqueness", p};
  rec.outputs["pairs"] = std::uint64_t{g.size()} * g.size();
  rec.outputs["non_unique"] = violations;
  rec.outputs["max_geodesics"] = max_count;
  if (violations) {
    json ce = json::array();
    for (auto [u, v] : chosen) ce.push_back(describe(u, v));
    rec.outputs["counterexamples"] = ce;
  }
  rec.pass = violations == 0;
  finish(rec, sw, o);
  return rec;
}

Record suite_diameter(const NetworkParams& p, const Options& o) {
  Stopwatch sw;
  oracle::ExplicitGraph g(p, o.max_vertices);
  auto vs = all_vertices(g);
  const int expected = p.dee() + p.r();
  const bool in_regime = p.dee() >= 2 * p.r() + 2;
  int diam = oracle::diameter(g);
  auto d = g.bfs(g.index_of(standard_origin(p)));
  std::uint64_t remote = 0;
  std::uint64_t remote_bad = 0;
  json ce = json::array();
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    if (!is_remote(vs[v], p)) continue;
    ++remote;
    if (d[v] == expected) continue;
    ++remote_bad;
    if (ce.size() < kMaxCounterexamples) ce.push_back(json{{"remote", vtext(vs[v], p)}, {"bfs", d[v]}});
  }
  Record rec{"verify", "diameter", p};
  rec.outputs["diameter"] = diam;
  rec.outputs["expected"] = expected;
  rec.outputs["in_regime"] = in_regime;
  rec.outputs["remote_vertices"] = remote;
  rec.outputs["remote_off_by"] = remote_bad;
  if (!ce.empty()) rec.outputs["counterexamples"] = ce;
  rec.pass = !in_regime || (diam == expected && remote_bad == 0);
  finish(rec, sw, o);
  return rec;
}

Record suite_reachability(const NetworkParams& p, const Options& o) {
  Stopwatch sw;
  oracle::ExplicitGraph g(p, o.max_vertices);
  const int k = p.dee() + p.r();
  const bool in_regime = p.dee() >= 2 * p.r() + 3;
  auto report = oracle::exact_k_reachable(g, k, kMaxCounterexamples);
  auto min_k = oracle::min_exact_reach_k(g, k);

  Record rec{"verify", "reachability", p};
  rec.outputs["k"] = k;
  rec.outputs["in_regime"] = in_regime;
  rec.outputs["exact_k_reachable"] = report.all_pairs_reachable_in_exactly_k;
  rec.outputs["min_k"] = min_k ? json(*min_k) : json(nullptr);
  json ce = json::array();
  for (const auto& [a, b] : report.counterexamples)
    ce.push_back(json{{"src", vtext(a, p)}, {"dst", vtext(b, p)}});

  std::uint64_t walk_failures = 0;
  std::uint64_t walks = 0;
  if (in_regime) {
    walks = o.samples ? o.samples : 1000;
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, g.size() - 1);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs(walks);
    for (auto& pr : pairs) pr = {pick(rng), pick(rng)};
    std::vector<char> ok(walks, 0);
    oracle::parallel_for(walks, [&](std::size_t t) {
      auto a = g.vertex(pairs[t].first);
      auto b = g.vertex(pairs[t].second);
      auto walk = reach_walk(a, b, p);
      ok[t] = walk.length() == k && is_valid_walk(walk, p) && walk.source() == a && walk.target() == b;
    });
    for (std::size_t t = 0; t < walks; ++t) {
      if (ok[t]) continue;
      ++walk_failures;
      if (ce.size() < kMaxCounterexamples)
        ce.push_back(json{{"walk_src", vtext(g.vertex(pairs[t].first), p)},
                          {"walk_dst", vtext(g.vertex(pairs[t].second), p)}});
    }
  }
  rec.outputs["walks"] = walks;
  rec.outputs["walk_failures"] = walk_failures;
  if (!ce.empty()) rec.outputs["counterexamples"] = ce;
  rec.pass = !in_regime || (report.all_pairs_reachable_in_exactly_k && walk_failures == 0);
  finish(rec, sw, o);
  return rec;
}

Record suite_containers(const NetworkParams& p, const Options& o) {
  Stopwatch sw;
  if (p.r() != 0) throw Error(ErrorKind::ParameterDomain, "containers are built for r = 0");
  oracle::ExplicitGraph g(p, o.max_vertices);
  auto vs = all_vertices(g);
  const auto origin = standard_origin(p);
  const auto origin_idx = g.index_of(origin);
  const int bound = p.dee() + 2;

  // distance to every in-neighbour Y_j of the origin
  std::vector<std::vector<int>> to_in(static_cast<std::size_t>(p.alphabet_size()) + 1);
  for (int j = 2; j <= p.alphabet_size(); ++j)
    to_in[static_cast<std::size_t>(j)] = reverse_bfs(g, g.index_of(origin_in_neighbor(j, p)));
  auto in_nbrs = in_neighbors(origin, p);
  std::sort(in_nbrs.begin(), in_nbrs.end());

  struct SourceSlot {
    int legs = 0;
    int leg_mismatches = 0;
    bool theta_ok = true;
    json issue;
  };
  std::vector<SourceSlot> per_source(g.size());
  oracle::parallel_for(g.size(), [&](std::size_t u) {
    if (u == origin_idx) return;
    auto& slot = per_source[u];
    const auto& x = vs[u];
    std::vector<Vertex> image;
    for (int s = 1; s <= p.alphabet_size(); ++s) {
      auto i = static_cast<Symbol>(s);
      if (i == x.front()) continue;
      auto z = compose(i, x, p);
      if (z == origin) continue;
      int j = theta(x, i, p);
      image.push_back(origin_in_neighbor(j, p));
      ++slot.legs;
      int predicted = leg_distance(x, i, p);
      int actual = to_in[static_cast<std::size_t>(j)][g.index_of(z)];
      if (predicted != actual && slot.leg_mismatches++ == 0 && slot.issue.is_null())
        slot.issue = json{{"src", vtext(x, p)}, {"i", s}, {"leg_distance", predicted}, {"bfs", actual}};
    }
    std::sort(image.begin(), image.end());
    std::vector<Vertex> expect;
    std::copy_if(in_nbrs.begin(), in_nbrs.end(), std::back_inserter(expect), [&](const Vertex& v) { return v != x; });
    if (image != expect) {
      slot.theta_ok = false;
      if (slot.issue.is_null()) slot.issue = json{{"src", vtext(x, p)}, {"theta", "not a bijection onto M(Y)\\{X}"}};
    }
  });

  const std::uint64_t n = g.size();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  bool exhaustive = o.exhaustive || (o.samples == 0 && n * (n - 1) <= kExhaustivePairBudget);
  if (exhaustive) {
    pairs.reserve(n * (n - 1));
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = 0; v < n; ++v)
        if (u != v) pairs.emplace_back(u, v);
  } else {
    pairs = sample_pairs(g.size(), o.samples ? o.samples : 10'000, o.seed);
  }
  struct PairSlot {
    int length = 0;
    bool ok = true;
  };
  std::vector<PairSlot> per_pair(pairs.size());
  oracle::parallel_for(pairs.size(), [&](std::size_t t) {
    auto c = container(vs[pairs[t].first], vs[pairs[t].second], p);
    auto diag = oracle::verify_container(c, p);
    per_pair[t] = {c.length(), diag.valid && c.length() <= bound};
  });

  Record rec{"verify", "containers", p};
  std::uint64_t legs = 0, leg_mismatches = 0, theta_bad = 0, bad_pairs = 0;
  int max_length = 0;
  json ce = json::array();
  for (auto& s : per_source) {
    legs += static_cast<std::uint64_t>(s.legs);
    leg_mismatches += static_cast<std::uint64_t>(s.leg_mismatches);
    theta_bad += s.theta_ok ? 0 : 1;
    if (!s.issue.is_null() && ce.size() < kMaxCounterexamples) ce.push_back(s.issue);
  }
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    max_length = std::max(max_length, per_pair[t].length);
    if (per_pair[t].ok) continue;
    ++bad_pairs;
    if (ce.size() < kMaxCounterexamples)
      ce.push_back(json{{"src", vtext(vs[pairs[t].first], p)}, {"dst", vtext(vs[pairs[t].second], p)},
                        {"length", per_pair[t].length}});
  }
  rec.inputs["pairs_mode"] = exhaustive ? "exhaustive" : "sampled";
  if (!exhaustive) rec.inputs["seed"] = o.seed;
  rec.outputs["pairs"] = pairs.size();
  rec.outputs["bad_containers"] = bad_pairs;
  rec.outputs["max_length"] = max_length;
  rec.outputs["bound"] = bound;
  rec.outputs["legs"] = legs;
  rec.outputs["leg_mismatches"] = leg_mismatches;
  rec.outputs["theta_violations"] = theta_bad;
  if (!ce.empty()) rec.outputs["counterexamples"] = ce;
  rec.pass = bad_pairs == 0 && leg_mismatches == 0 && theta_bad == 0;
  finish(rec, sw, o);
  return rec;
}

Record suite_witness(const NetworkParams& p, const Options& o) {
  Stopwatch sw;
  oracle::ExplicitGraph g(p, o.max_vertices);
  auto w = lower_bound_witness(p);
  auto c = container(w.source, w.target, p);
  auto diag = oracle::verify_container(c, p);
  const auto target = g.index_of(w.target);

  Record rec{"verify", "witness", p};
  rec.inputs = json{{"src", vtext(w.source, p)}, {"dst", vtext(w.target, p)}};
  json legs = json::array();
  bool ok = true;
  for (const auto& leg : w.legs) {
    // independent check: the BFS geodesic is unique and crosses the bottleneck
    auto geos = oracle::enumerate_geodesics(g, g.index_of(leg.start), target, 4);
    bool through = geos.size() == 1 && std::find(geos[0].vertices.begin(), geos[0].vertices.end(), w.bottleneck) !=
                                           geos[0].vertices.end();
    int bfs = geos.empty() ? oracle::kUnreachable : geos[0].length();
    if (leg.i < p.dee()) ok = ok && bfs == p.dee() && through;
    legs.push_back(json{{"i", leg.i}, {"start", vtext(leg.start, p)}, {"bfs", bfs}, {"through_bottleneck", through}});
  }
  rec.outputs["bottleneck"] = vtext(w.bottleneck, p);
  rec.outputs["container_length"] = c.length();
  rec.outputs["expected_length"] = p.dee() + 2;
  rec.outputs["container_valid"] = diag.valid;
  rec.outputs["legs"] = legs;
  rec.pass = ok && w.ok && diag.valid && c.length() == p.dee() + 2;
  finish(rec, sw, o);
  return rec;
}

Record suite_menger(const NetworkParams& p, const Options& o) {
  Stopwatch sw;
  oracle::ExplicitGraph g(p, o.max_vertices);
  auto pairs = sample_pairs(g.size(), o.samples ? o.samples : 1000, o.seed);
  std::vector<int> counts(pairs.size());
  oracle::parallel_for(pairs.size(),
                       [&](std::size_t t) { counts[t] = g.max_disjoint_paths(pairs[t].first, pairs[t].second); });
  Record rec{"verify", "menger", p};
  rec.inputs["seed"] = o.seed;
  const int expected = p.degree();
  std::uint64_t failures = 0;
  json ce = json::array();
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    if (counts[t] == expected) continue;
    ++failures;
    if (ce.size() < kMaxCounterexamples)
      ce.push_back(json{{"src", vtext(g.vertex(pairs[t].first), p)},
                        {"dst", vtext(g.vertex(pairs[t].second), p)},
                        {"disjoint_paths", counts[t]}});
  }
  rec.outputs["pairs"] = pairs.size();
  rec.outputs["expected"] = expected;
  rec.outputs["min"] = *std::min_element(counts.begin(), counts.end());
  rec.outputs["failures"] = failures;
  if (!ce.empty()) rec.outputs["counterexamples"] = ce;
  // connectivity is only claimed for the full digraph
  rec.pass = p.r() != 0 || failures == 0;
  finish(rec, sw, o);
  return rec;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Writer w(out, format_of(o, Format::Text, {Format::Text, Format::Jsonl}), o);
  std::function<Record(const NetworkParams&, const Options&)> run_one;
  Instances list;
  const auto& s = o.suite;
  if (s == "distances") {
    run_one = suite_distances;
    list = pick_instances(o, [](int, int, int r) { return r == 0; }, {0});
  } else if (s == "uniqueness") {
    run_one = suite_uniqueness;
    list = pick_instances(o, [](int, int, int) { return true; }, {0});
  } else if (s == "diameter") {
    run_one = suite_diameter;
    list = pick_instances(o, [](int, int dee, int r) { return dee >= 2 * r + 2; }, {0, 1});
  } else if (s == "reachability") {
    run_one = suite_reachability;
    list = pick_instances(o, [](int, int dee, int r) { return dee >= 2 * r + 3; }, {0, 1});
  } else if (s == "containers") {
    run_one = suite_containers;
    list = pick_instances(
        o, [](int delta, int dee, int r) { return r == 0 && in_list(delta, dee, {{4, 4}, {5, 4}, {5, 5}, {6, 5}}); },
        {0});
  } else if (s == "witness") {
    run_one = suite_witness;
    list = pick_instances(o, [](int, int dee, int r) { return r == 0 && dee >= 4; }, {0});
  } else {
    run_one = suite_menger;
    list = pick_instances(o, [](int delta, int dee, int r) { return r == 0 && in_list(delta, dee, {{4, 4}, {5, 4}}); },
                          {0});
  }
  if (list.empty()) throw UsageError("no instance of suite '" + s + "' fits under --max-vertices");

  int failed = 0;
  for (const auto& p : list) {
    auto rec = run_one(p, o);
    if (!rec.pass) ++failed;
    w.record(rec);
  }
  w.text("verify " + s + ": " + std::to_string(list.size() - static_cast<std::size_t>(failed)) + "/" +
         std::to_string(list.size()) + " instances pass");
  return failed ? kExitCheckFailed : kExitPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cycle prefix digraph generator, router and verifier", "cpnet"};
  app.require_subcommand(1);
  app.add_option("--delta", o.delta, "Out-degree of the full digraph (alphabet size - 1)");
  app.add_option("--dee", o.dee, "Vertex length D");
  app.add_option("--r", o.r, "Number of deleted partial rotations");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "dot", "jsonl", "csv"}));
  app.add_option("--max-vertices", o.max_vertices, "Refuse explicit instances above this size")
      ->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for sampled suites")->capture_default_str();
  app.add_flag("--quiet", o.quiet, "Only print failures");
  app.add_flag("--timing", o.timing, "Add elapsed_ms to every record");

  auto* gen = app.add_subcommand("gen", "Export the arc list (or a BFS distance table)");
  gen->add_option("--distances-from", o.distances_from, "Emit (src,dst,d) rows from this vertex instead");
  auto* route = app.add_subcommand("route", "Route between two vertices");
  route->add_option("src", o.x)->required();
  route->add_option("dst", o.y)->required();
  route->add_option("--mode", o.mode)->check(CLI::IsMember({"shortest", "restricted", "reach"}));
  auto* cont = app.add_subcommand("container", "Build the disjoint path container for a pair");
  cont->add_option("src", o.x)->required();
  cont->add_option("dst", o.y)->required();
  auto* verify = app.add_subcommand("verify", "Run a verification suite against the brute-force oracle");
  verify->add_option("suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"distances", "uniqueness", "diameter", "reachability", "containers", "witness", "menger"}));
  verify->add_option("--samples", o.samples, "Sampled pairs or walks per instance");
  verify->add_flag("--exhaustive", o.exhaustive, "Check every ordered pair in the containers suite");
  auto* params = app.add_subcommand("params", "Print instance statistics");
  params->add_flag("--measure", o.measure, "Also compute the diameter by BFS");
  for (auto* sub : {gen, route, cont, verify, params}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (route->parsed()) return cmd_route(o, out);
    if (cont->parsed()) return cmd_container(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_params(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"cpnet"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cycleprefix::cli
