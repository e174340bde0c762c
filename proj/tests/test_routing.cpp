#include <algorithm>

#include "cycleprefix/oracle.hpp"
#include "cycleprefix/routing.hpp"
#include "support.hpp"

using namespace cycleprefix;
using testing::V;

TEST_CASE("header split") {
  auto s = header_split(V("47285136"), V("82164753"));
  CHECK(s.header_len == 4);
  CHECK(s.header == std::vector<Symbol>{8, 2, 1, 6});
  CHECK(s.tail == std::vector<Symbol>{4, 7, 5, 3});
  CHECK(header_split(V("1234"), V("1234")).header_len == 0);
}

TEST_CASE("distance examples") {
  CHECK(distance(V("47285136"), V("82164753"), NetworkParams(8, 8)) == 4);
  CHECK(distance(V("531624"), V("123456"), NetworkParams(6, 6)) == 4);
  CHECK(distance(V("2413"), V("2413"), NetworkParams(4, 4)) == 0);
  NetworkParams p(4, 4);
  CHECK(distance(V("1234"), V("5214"), p) == 4);
  CHECK(oracle::bfs_distances(V("1234"), p).at(V("5214")) == 4);
  CHECK_ERROR_KIND(distance(V("1234"), V("5214"), NetworkParams(4, 4, 1)), ErrorKind::ParameterDomain);
}

TEST_CASE("shortest path examples") {
  NetworkParams p8(8, 8);
  auto path = shortest_path(V("47285136"), V("82164753"), p8);
  CHECK(path.length() == 4);
  std::vector<Symbol> leads;
  for (std::size_t j = 1; j < path.vertices.size(); ++j) leads.push_back(path.vertices[j].front());
  CHECK(leads == std::vector<Symbol>{6, 1, 2, 8});

  NetworkParams p(5, 4);
  CHECK(shortest_path(V("2135"), V("2134"), p).vertices ==
        std::vector<Vertex>{V("2135"), V("4213"), V("3421"), V("1342"), V("2134")});
  CHECK_ERROR_KIND(shortest_path(V("1325"), V("1325"), p), ErrorKind::SameVertex);
}

TEST_CASE("formula distance equals BFS on every pair") {
  for (auto p : testing::small_instances(0, 720)) {
    CAPTURE(p.to_string());
    oracle::ExplicitGraph g(p);
    std::uint64_t mismatches = 0;
    for (std::uint32_t u = 0; u < g.size(); ++u) {
      auto d = g.bfs(u);
      auto x = g.vertex(u);
      for (std::uint32_t v = 0; v < g.size(); ++v)
        if (distance(x, g.vertex(v), p) != d[v]) ++mismatches;
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("shortest paths are geodesics with monotone headers") {
  NetworkParams p(4, 4);
  auto vs = testing::all_vertices(p);
  oracle::ExplicitGraph g(p);
  bool ok = true;
  for (const auto& x : vs) {
    auto d = g.bfs(g.index_of(x));
    for (const auto& y : vs) {
      if (x == y) continue;
      auto path = shortest_path(x, y, p);
      ok = ok && is_valid_walk(path, p) && path.source() == x && path.target() == y &&
           path.length() == d[g.index_of(y)];
      for (std::size_t j = 0; j < path.vertices.size(); ++j)
        ok = ok && distance(path.vertices[j], y, p) == path.length() - static_cast<int>(j);
    }
  }
  CHECK(ok);
}

TEST_CASE("next hop proposition") {
  NetworkParams p8(8, 8);
  CHECK(next_hop_distance_check(V("47285136"), V("82164753"), 6, p8) == 3);
  CHECK_ERROR_KIND(next_hop_distance_check(V("1234"), V("1234"), 2, NetworkParams(4, 4)), ErrorKind::SameVertex);

  for (auto p : {NetworkParams(4, 4), NetworkParams(5, 3)}) {
    auto vs = testing::all_vertices(p);
    bool ok = true;
    for (const auto& x : vs)
      for (const auto& y : vs) {
        if (x == y) continue;
        int k = distance(x, y, p);
        Symbol yk = y.at(k);
        for (int i = 1; i <= p.alphabet_size(); ++i) {
          if (i == x.front()) continue;
          int d = next_hop_distance_check(x, y, static_cast<Symbol>(i), p);
          ok = ok && (i == yk ? d == k - 1 : d >= k);
        }
      }
    CHECK(ok);
  }
}

TEST_CASE("restricted route in the deleted graph") {
  NetworkParams p(4, 4, 1);
  auto path = restricted_route(V("1234"), V("5214"), p);
  CHECK(path.length() == 5);
  std::vector<Vertex> first{V("1234"), V("4123"), V("5412"), V("1542"), V("2154"), V("5214")};
  std::vector<Vertex> second{V("1234"), V("5123"), V("4512"), V("1452"), V("2145"), V("5214")};
  CHECK((path.vertices == first || path.vertices == second));

  CHECK_ERROR_KIND(restricted_route(V("1234"), V("1234"), p), ErrorKind::SameVertex);
  CHECK_ERROR_KIND(restricted_route(V("12345"), V("21345"), NetworkParams(5, 5, 2)), ErrorKind::ParameterDomain);
}

TEST_CASE("restricted route is bounded on every pair") {
  for (auto p : {NetworkParams(4, 4, 1), NetworkParams(5, 4, 1), NetworkParams(4, 4), NetworkParams(5, 4),
                 NetworkParams(6, 6, 2)}) {
    CAPTURE(p.to_string());
    oracle::ExplicitGraph g(p);
    const int bound = p.dee() + p.r();
    // vertex symmetry: pairs from the origin cover every ordered pair up to relabeling,
    // plus every pair on the two smaller instances
    std::vector<std::uint32_t> sources{g.index_of(standard_origin(p))};
    if (g.size() <= 360)
      for (std::uint32_t u = 0; u < g.size(); ++u) sources.push_back(u);
    bool ok = true;
    for (auto u : sources) {
      auto d = g.bfs(u);
      auto x = g.vertex(u);
      for (std::uint32_t v = 0; v < g.size(); ++v) {
        if (v == u) continue;
        auto y = g.vertex(v);
        auto path = restricted_route(x, y, p);
        ok = ok && is_valid_walk(path, p) && path.has_distinct_vertices() && path.source() == x &&
             path.target() == y && path.length() <= bound && path.length() >= d[v];
        if (p.r() == 0) ok = ok && path.length() <= p.dee();
        if (u == sources.front() && is_remote(y, p)) ok = ok && path.length() == bound;
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("exact-length reach walks") {
  auto w = reach_walk(V("123"), V("123"), NetworkParams(3, 3));
  CHECK(w.length() == 3);
  CHECK(is_valid_walk(w, NetworkParams(3, 3)));

  for (auto p : {NetworkParams(5, 5, 1), NetworkParams(3, 3), NetworkParams(6, 5, 1), NetworkParams(7, 7, 2)}) {
    CAPTURE(p.to_string());
    auto origin = standard_origin(p);
    bool ok = true;
    for (const auto& y : testing::all_vertices(p)) {
      auto walk = reach_walk(origin, y, p);
      ok = ok && walk.length() == p.dee() + p.r() && is_valid_walk(walk, p) && walk.target() == y;
    }
    CHECK(ok);
  }

  NetworkParams p(5, 5, 1);
  auto x = V("31542");
  auto walk = reach_walk(x, V("25413"), p);
  CHECK(walk.length() == 6);
  CHECK(walk.source() == x);
  CHECK(is_valid_walk(walk, p));
  CHECK_ERROR_KIND(reach_walk(V("1234"), V("1234"), NetworkParams(4, 4, 1)), ErrorKind::ParameterDomain);
}

TEST_CASE("remote vertices") {
  NetworkParams p(4, 4);
  CHECK(is_remote(V("5214"), p));
  CHECK_FALSE(is_remote(V("1234"), p));
  CHECK_FALSE(is_remote(V("2314"), p));

  auto w = remote_distance_witness(NetworkParams(4, 4, 1));
  CHECK(w.vertex == V("5214"));
  CHECK(w.distance == 5);
  CHECK(w.ok);
  CHECK(remote_distance_witness(p).distance == 4);
  CHECK_ERROR_KIND(remote_distance_witness(NetworkParams(5, 5, 2)), ErrorKind::ParameterDomain);

  for (auto q : {NetworkParams(4, 4), NetworkParams(4, 4, 1), NetworkParams(5, 5, 1), NetworkParams(6, 4, 1)}) {
    CAPTURE(q.to_string());
    auto table = oracle::bfs_distances(standard_origin(q), q);
    int remote = 0;
    bool ok = true;
    for (const auto& v : testing::all_vertices(q))
      if (is_remote(v, q)) {
        ++remote;
        ok = ok && table.at(v) == q.dee() + q.r();
      }
    CHECK(remote > 0);
    CHECK(ok);
  }
}
