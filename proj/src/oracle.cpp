#include "cycleprefix/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <thread>

namespace cycleprefix::oracle {

namespace {

// m (m-1) ... (m-t+1)
std::uint64_t falling(int m, int t) {
  std::uint64_t p = 1;
  for (int j = 0; j < t; ++j) p *= static_cast<std::uint64_t>(m - j);
  return p;
}

void check_cap(const NetworkParams& params, std::uint64_t cap) {
  auto n = vertex_count(params);
  if (n > cap || n > std::numeric_limits<std::uint32_t>::max())
    throw Error(ErrorKind::InstanceTooLarge, params.to_string() + " has " + std::to_string(n) +
                                                 " vertices, cap is " + std::to_string(cap));
}

}  // namespace

std::uint64_t lex_rank(const Vertex& x, const NetworkParams& params) {
  validate(x, params);
  const int n = params.alphabet_size();
  const int dee = params.dee();
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::uint64_t rank = 0;
  for (int i = 0; i < dee; ++i) {
    Symbol s = x.at(i + 1);
    int smaller_unused = 0;
    for (int t = 1; t < s; ++t)
      if (!used[static_cast<std::size_t>(t)]) ++smaller_unused;
    rank += static_cast<std::uint64_t>(smaller_unused) * falling(n - i - 1, dee - i - 1);
    used[s] = true;
  }
  return rank;
}

Vertex lex_unrank(std::uint64_t rank, const NetworkParams& params) {
  const int n = params.alphabet_size();
  const int dee = params.dee();
  if (rank >= vertex_count(params)) throw Error(ErrorKind::IndexOutOfRange, "rank out of range");
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<Symbol> seq;
  for (int i = 0; i < dee; ++i) {
    std::uint64_t block = falling(n - i - 1, dee - i - 1);
    auto skip = rank / block;
    rank %= block;
    for (int s = 1; s <= n; ++s) {
      if (used[static_cast<std::size_t>(s)]) continue;
      if (skip == 0) {
        used[static_cast<std::size_t>(s)] = true;
        seq.push_back(static_cast<Symbol>(s));
        break;
      }
      --skip;
    }
  }
  return Vertex(std::move(seq));
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  for (auto& t : pool) t.join();
}

ExplicitGraph::ExplicitGraph(const NetworkParams& params, std::uint64_t cap) : params_(params) {
  check_cap(params, cap);
  n_ = static_cast<std::uint32_t>(vertex_count(params));
  degree_ = params.degree();
  const auto dee = static_cast<std::size_t>(params.dee());
  symbols_.resize(std::size_t{n_} * dee);
  out_.resize(std::size_t{n_} * static_cast<std::size_t>(degree_));

  parallel_for(n_, [&](std::size_t u) {
    Vertex x = lex_unrank(u, params_);
    std::copy(x.symbols().begin(), x.symbols().end(), symbols_.begin() + static_cast<std::ptrdiff_t>(u * dee));
    auto nbrs = out_neighbors(x, params_);
    for (std::size_t j = 0; j < nbrs.size(); ++j)
      out_[u * static_cast<std::size_t>(degree_) + j] = static_cast<std::uint32_t>(lex_rank(nbrs[j], params_));
  });

  in_offsets_.assign(std::size_t{n_} + 1, 0);
  for (auto v : out_) ++in_offsets_[v + 1];
  for (std::size_t v = 0; v < n_; ++v) in_offsets_[v + 1] += in_offsets_[v];
  in_.resize(out_.size());
  std::vector<std::uint32_t> fill(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::uint32_t u = 0; u < n_; ++u)
    for (auto v : out(u)) in_[fill[v]++] = u;
}

Vertex ExplicitGraph::vertex(std::uint32_t u) const {
  const auto dee = static_cast<std::size_t>(params_.dee());
  auto first = symbols_.begin() + static_cast<std::ptrdiff_t>(std::size_t{u} * dee);
  return Vertex(std::vector<Symbol>(first, first + static_cast<std::ptrdiff_t>(dee)));
}

std::span<const std::uint32_t> ExplicitGraph::out(std::uint32_t u) const {
  return {out_.data() + std::size_t{u} * static_cast<std::size_t>(degree_), static_cast<std::size_t>(degree_)};
}

std::span<const std::uint32_t> ExplicitGraph::in(std::uint32_t u) const {
  return {in_.data() + in_offsets_[u], in_offsets_[u + 1] - in_offsets_[u]};
}

std::vector<int> ExplicitGraph::bfs(std::uint32_t source) const {
  std::vector<int> dist(n_, kUnreachable);
  std::vector<std::uint32_t> queue;
  queue.reserve(n_);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto u = queue[head];
    for (auto v : out(u))
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

std::vector<std::uint64_t> ExplicitGraph::geodesic_counts(std::uint32_t source, std::span<const int> dist) const {
  std::vector<std::uint32_t> order(n_);
  for (std::uint32_t u = 0; u < n_; ++u) order[u] = u;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    // unreachable vertices last
    auto key = [&](std::uint32_t u) { return dist[u] < 0 ? std::numeric_limits<int>::max() : dist[u]; };
    return key(a) < key(b);
  });
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> count(n_, 0);
  count[source] = 1;
  for (auto u : order) {
    if (dist[u] < 0) break;
    for (auto v : out(u))
      if (dist[v] == dist[u] + 1) count[v] = count[v] > kMax - count[u] ? kMax : count[v] + count[u];
  }
  return count;
}

int ExplicitGraph::max_disjoint_paths(std::uint32_t u, std::uint32_t v) const {
  if (u == v) return 0;
  struct Edge {
    std::uint32_t to;
    int cap;
    std::uint32_t rev;
  };
  // node w splits into w_in = 2w and w_out = 2w + 1
  const std::uint32_t nodes = 2 * n_;
  std::vector<std::vector<Edge>> g(nodes);
  auto add = [&](std::uint32_t a, std::uint32_t b, int cap) {
    g[a].push_back({b, cap, static_cast<std::uint32_t>(g[b].size())});
    g[b].push_back({a, 0, static_cast<std::uint32_t>(g[a].size() - 1)});
  };
  const int big = params_.alphabet_size() + 1;
  for (std::uint32_t w = 0; w < n_; ++w) {
    add(2 * w, 2 * w + 1, (w == u || w == v) ? big : 1);
    for (auto z : out(w)) add(2 * w + 1, 2 * z, 1);
  }
  const std::uint32_t s = 2 * u + 1;
  const std::uint32_t t = 2 * v;
  int flow = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> parent(nodes);
  while (true) {
    std::vector<bool> seen(nodes, false);
    std::deque<std::uint32_t> queue{s};
    seen[s] = true;
    while (!queue.empty() && !seen[t]) {
      auto a = queue.front();
      queue.pop_front();
      for (std::uint32_t e = 0; e < g[a].size(); ++e) {
        const auto& edge = g[a][e];
        if (edge.cap > 0 && !seen[edge.to]) {
          seen[edge.to] = true;
          parent[edge.to] = {a, e};
          queue.push_back(edge.to);
        }
      }
    }
    if (!seen[t]) break;
    for (auto b = t; b != s;) {
      auto [a, e] = parent[b];
      g[a][e].cap -= 1;
      g[b][g[a][e].rev].cap += 1;
      b = a;
    }
    ++flow;
  }
  return flow;
}

int DistanceTable::eccentricity() const {
  int best = 0;
  for (int d : dist) {
    if (d == kUnreachable) return kUnreachable;
    best = std::max(best, d);
  }
  return best;
}

DistanceTable bfs_distances(const Vertex& source, const NetworkParams& params, std::uint64_t cap) {
  validate(source, params);
  ExplicitGraph graph(params, cap);
  return DistanceTable{params, source, graph.bfs(graph.index_of(source))};
}

int diameter(const ExplicitGraph& graph) {
  const auto n = graph.size();
  std::vector<std::uint32_t> sources{graph.index_of(standard_origin(graph.params())), n / 3, (2 * n) / 3, n - 1};
  std::vector<int> ecc(sources.size());
  parallel_for(sources.size(), [&](std::size_t i) {
    auto dist = graph.bfs(sources[i]);
    int e = 0;
    for (int d : dist) e = (d == kUnreachable || e == kUnreachable) ? kUnreachable : std::max(e, d);
    ecc[i] = e;
  });
  for (int e : ecc)
    if (e != ecc.front())
      throw Error(ErrorKind::DomainError, "eccentricities differ across sources of " + graph.params().to_string());
  return ecc.front();
}

int diameter(const NetworkParams& params, std::uint64_t cap) { return diameter(ExplicitGraph(params, cap)); }

std::uint64_t count_geodesics(const Vertex& x, const Vertex& y, const NetworkParams& params, std::uint64_t cap) {
  validate(x, params);
  validate(y, params);
  ExplicitGraph graph(params, cap);
  auto src = graph.index_of(x);
  auto dist = graph.bfs(src);
  return graph.geodesic_counts(src, dist)[graph.index_of(y)];
}

std::vector<Path> enumerate_geodesics(const ExplicitGraph& graph, std::uint32_t x, std::uint32_t y,
                                      std::size_t limit) {
  auto dist = graph.bfs(x);
  std::vector<Path> out;
  if (dist[y] == kUnreachable) return out;
  // backtrack from y over predecessors one layer closer to x
  std::vector<std::uint32_t> stack{y};
  std::function<void(std::uint32_t)> walk = [&](std::uint32_t v) {
    if (out.size() >= limit) return;
    if (v == x) {
      Path p;
      for (auto it = stack.rbegin(); it != stack.rend(); ++it) p.vertices.push_back(graph.vertex(*it));
      out.push_back(std::move(p));
      return;
    }
    for (auto u : graph.in(v))
      if (dist[u] != kUnreachable && dist[u] + 1 == dist[v]) {
        stack.push_back(u);
        walk(u);
        stack.pop_back();
      }
  };
  walk(y);
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) { return a.vertices < b.vertices; });
  return out;
}

std::vector<Path> enumerate_geodesics(const Vertex& x, const Vertex& y, const NetworkParams& params,
                                      std::uint64_t cap, std::size_t limit) {
  validate(x, params);
  validate(y, params);
  ExplicitGraph graph(params, cap);
  return enumerate_geodesics(graph, graph.index_of(x), graph.index_of(y), limit);
}

namespace {

using Row = std::vector<std::uint64_t>;

std::vector<Row> reach_in_exactly(const ExplicitGraph& graph, int k) {
  const auto n = graph.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<Row> cur(n, Row(words, 0));
  for (std::uint32_t u = 0; u < n; ++u) cur[u][u / 64] |= std::uint64_t{1} << (u % 64);
  for (int step = 0; step < k; ++step) {
    std::vector<Row> next(n, Row(words, 0));
    parallel_for(n, [&](std::size_t u) {
      for (auto v : graph.out(static_cast<std::uint32_t>(u)))
        for (std::size_t w = 0; w < words; ++w) next[u][w] |= cur[v][w];
    });
    cur = std::move(next);
  }
  return cur;
}

bool row_full(const Row& row, std::uint32_t n) {
  for (std::uint32_t v = 0; v < n; ++v)
    if (!((row[v / 64] >> (v % 64)) & 1u)) return false;
  return true;
}

}  // namespace

ReachabilityReport exact_k_reachable(const ExplicitGraph& graph, int k, std::size_t max_counterexamples) {
  if (k < 0) throw Error(ErrorKind::DomainError, "walk length must be non-negative");
  ReachabilityReport report{graph.params(), k, true, {}};
  const auto n = graph.size();
  auto reach = reach_in_exactly(graph, k);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v)
      if (!((reach[u][v / 64] >> (v % 64)) & 1u)) {
        report.all_pairs_reachable_in_exactly_k = false;
        if (report.counterexamples.size() < max_counterexamples)
          report.counterexamples.emplace_back(graph.vertex(u), graph.vertex(v));
      }
  return report;
}

ReachabilityReport exact_k_reachable(const NetworkParams& params, int k, std::uint64_t cap,
                                     std::size_t max_counterexamples) {
  return exact_k_reachable(ExplicitGraph(params, cap), k, max_counterexamples);
}

std::optional<int> min_exact_reach_k(const ExplicitGraph& graph, int k_max) {
  const auto n = graph.size();
  for (int k = 0; k <= k_max; ++k) {
    auto reach = reach_in_exactly(graph, k);
    if (std::all_of(reach.begin(), reach.end(), [&](const Row& row) { return row_full(row, n); })) return k;
  }
  return std::nullopt;
}

ContainerDiagnostics verify_container(const Container& c, const NetworkParams& params) {
  ContainerDiagnostics diag;
  diag.width = static_cast<int>(c.paths.size());
  diag.length = c.length();
  auto problem = [&](std::string msg) { diag.problems.push_back(std::move(msg)); };

  if (c.src == c.dst) problem("source equals destination");
  if (diag.width != params.degree())
    problem("width " + std::to_string(diag.width) + " differs from degree " + std::to_string(params.degree()));

  std::vector<std::pair<Vertex, std::size_t>> interior;  // vertex, owning path
  for (std::size_t p = 0; p < c.paths.size(); ++p) {
    const auto& path = c.paths[p];
    const std::string tag = "path " + std::to_string(p);
    if (path.vertices.size() < 2) {
      problem(tag + " has no arcs");
      continue;
    }
    if (path.source() != c.src) problem(tag + " does not start at " + c.src.to_string());
    if (path.target() != c.dst) problem(tag + " does not end at " + c.dst.to_string());
    if (!is_valid_walk(path, params)) problem(tag + " uses a non-arc");
    if (!path.has_distinct_vertices()) problem(tag + " repeats a vertex");
    for (std::size_t i = 1; i + 1 < path.vertices.size(); ++i) {
      const auto& v = path.vertices[i];
      if (v == c.src || v == c.dst) problem(tag + " passes through an endpoint internally");
      interior.emplace_back(v, p);
    }
  }
  std::sort(interior.begin(), interior.end());
  for (std::size_t i = 1; i < interior.size(); ++i)
    if (interior[i].first == interior[i - 1].first && interior[i].second != interior[i - 1].second) {
      problem("paths " + std::to_string(interior[i - 1].second) + " and " + std::to_string(interior[i].second) +
              " share " + interior[i].first.to_string(params));
      if (!diag.shared_vertex) diag.shared_vertex = interior[i].first;
    }
  diag.valid = diag.problems.empty();
  return diag;
}

int menger_disjoint_count(const Vertex& x, const Vertex& y, const NetworkParams& params, std::uint64_t cap) {
  validate(x, params);
  validate(y, params);
  if (x == y) return 0;
  ExplicitGraph graph(params, cap);
  return graph.max_disjoint_paths(graph.index_of(x), graph.index_of(y));
}

}  // namespace cycleprefix::oracle
