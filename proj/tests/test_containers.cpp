#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cycleprefix/containers.hpp"
#include "cycleprefix/oracle.hpp"
#include "cycleprefix/routing.hpp"
#include "support.hpp"

using namespace cycleprefix;
using testing::V;

namespace {

std::vector<Vertex> theta_image(const Vertex& x, const NetworkParams& p) {
  auto origin = standard_origin(p);
  std::vector<Vertex> image;
  for (int i = 1; i <= p.alphabet_size(); ++i) {
    auto s = static_cast<Symbol>(i);
    if (s == x.front() || compose(s, x, p) == origin) continue;
    image.push_back(origin_in_neighbor(theta(x, s, p), p));
  }
  std::sort(image.begin(), image.end());
  return image;
}

std::vector<Vertex> expected_image(const Vertex& x, const NetworkParams& p) {
  auto m = in_neighbors(standard_origin(p), p);
  m.erase(std::remove(m.begin(), m.end(), x), m.end());
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

TEST_CASE("alpha") {
  CHECK(alpha(V("531624"), 4) == 3);
  CHECK(alpha(V("2134"), 1) == 1);
  CHECK(alpha(V("3142"), 4) == 3);
  CHECK_ERROR_KIND(alpha(V("2345"), 1), ErrorKind::UndefinedAlpha);
}

TEST_CASE("beta") {
  CHECK(beta(V("531624"), 3, 4) == 6);
  CHECK(beta(V("531624"), 2, 4) == 7);
  CHECK(beta(V("531624"), 1, 4) == 6);
  // every symbol above k sits left of i
  CHECK(beta(V("4531"), 1, 3) == 6);
  CHECK(beta(V("1325"), 1, 3) == 4);
}

TEST_CASE("characteristic triple") {
  NetworkParams p(6, 6);
  auto t = char_triple(V("531624"), p);
  CHECK(t.alpha == 3);
  CHECK(t.beta == 6);
  CHECK(t.beta1 == 6);
  CHECK(distance(V("531624"), standard_origin(p), p) == 4);
  CHECK_ERROR_KIND(char_triple(V("123456"), p), ErrorKind::DomainError);
}

TEST_CASE("source cases and normalisation") {
  NetworkParams p(5, 4);
  CHECK(source_case(V("1325"), p) == SourceCase::LeadsWithOne);
  CHECK(source_case(V("4132"), p) == SourceCase::LeadsPastHeader);  // k = 3
  CHECK(source_case(V("2413"), p) == SourceCase::General);
  auto tau = large_symbol_normalizer(V("6352"), p);
  CHECK(tau.apply(V("6352")) == V("5362"));
  for (int s = 1; s <= 4; ++s) CHECK(tau(static_cast<Symbol>(s)) == s);
}

TEST_CASE("theta on the worked example") {
  NetworkParams p(5, 4);
  for (int i = 2; i <= 6; ++i) CHECK(theta(V("1325"), static_cast<Symbol>(i), p) == i);
  CHECK_ERROR_KIND(theta(V("1325"), 1, p), ErrorKind::DomainError);
  // 2134 o 1 = 1234 is the destination itself
  CHECK_ERROR_KIND(theta(V("2134"), 1, p), ErrorKind::DomainError);
  CHECK_ERROR_KIND(theta(V("1234"), 2, p), ErrorKind::SameVertex);
  CHECK_ERROR_KIND(theta(V("1325"), 2, NetworkParams(5, 4, 1)), ErrorKind::ParameterDomain);
}

TEST_CASE("theta sends i = 1 to Y_k when x_1 = k + 1") {
  int seen = 0;
  for (auto p : {NetworkParams(5, 4), NetworkParams(5, 5)})
    for (const auto& x : testing::all_vertices(p)) {
      if (x == standard_origin(p)) continue;
      int k = distance(x, standard_origin(p), p);
      if (x.front() != k + 1 || compose(1, x, p) == standard_origin(p)) continue;
      if (large_symbol_normalizer(x, p).apply(x) != x) continue;
      CHECK(theta(x, 1, p) == k);
      ++seen;
    }
  CHECK(seen > 0);
}

TEST_CASE("theta is a bijection onto M(Y) minus X") {
  for (auto p : {NetworkParams(3, 3), NetworkParams(4, 4), NetworkParams(5, 4), NetworkParams(5, 5),
                 NetworkParams(6, 4)}) {
    CAPTURE(p.to_string());
    std::map<SourceCase, int> by_case;
    int edge = 0;
    for (const auto& x : testing::all_vertices(p)) {
      if (x == standard_origin(p)) continue;
      CHECK(theta_image(x, p) == expected_image(x, p));
      ++by_case[source_case(x, p)];
      if (x.front() == p.dee() + 1 && distance(x, standard_origin(p), p) == p.dee()) ++edge;
    }
    CHECK(by_case.size() == 3);
    CHECK(edge > 0);
  }
}

TEST_CASE("leg distance") {
  NetworkParams p(5, 4);
  CHECK(leg_distance(V("1325"), 2, p) == 4);
  CHECK(leg_distance(V("1325"), 4, p) == 2);
  CHECK(leg_distance(V("1325"), 5, p) == 3);

  for (auto q : {NetworkParams(4, 4), NetworkParams(5, 4), NetworkParams(5, 5), NetworkParams(6, 4)}) {
    CAPTURE(q.to_string());
    auto origin = standard_origin(q);
    std::map<SourceCase, int> checked;
    bool ok = true;
    for (const auto& x : testing::all_vertices(q)) {
      if (x == origin) continue;
      for (int i = 1; i <= q.alphabet_size(); ++i) {
        auto s = static_cast<Symbol>(i);
        auto z = compose(s, x, q);
        if (s == x.front() || z == origin) continue;
        auto target = origin_in_neighbor(theta(x, s, q), q);
        ok = ok && leg_distance(x, s, q) == oracle::bfs_distances(z, q).at(target);
        ++checked[source_case(x, q)];
      }
    }
    CHECK(ok);
    CHECK(checked.size() == 3);
  }
}

TEST_CASE("container for 1325") {
  NetworkParams p(5, 4);
  auto c = container(V("1325"), V("1234"), p);
  std::vector<std::vector<Vertex>> rows{
      {V("1325"), V("2135"), V("4213"), V("3421"), V("1342"), V("2134"), V("1234")},
      {V("1325"), V("3125"), V("4312"), V("1432"), V("3142"), V("2314"), V("1234")},
      {V("1325"), V("4132"), V("3412"), V("2341"), V("1234")},
      {V("1325"), V("5132"), V("4513"), V("3451"), V("2345"), V("1234")},
      {V("1325"), V("6132"), V("4613"), V("3461"), V("2346"), V("1234")},
  };
  REQUIRE(c.paths.size() == rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) CHECK(c.paths[j].vertices == rows[j]);
  auto diag = oracle::verify_container(c, p);
  CHECK(diag.valid);
  CHECK(diag.length == 6);
  CHECK_ERROR_KIND(container(V("1325"), V("1325"), p), ErrorKind::SameVertex);
}

TEST_CASE("a shared interior vertex is reported") {
  NetworkParams p(5, 4);
  auto c = container(V("1325"), V("1234"), p);
  c.paths[1].vertices = c.paths[0].vertices;
  auto diag = oracle::verify_container(c, p);
  CHECK_FALSE(diag.valid);
  REQUIRE(diag.shared_vertex.has_value());
  const auto& row = c.paths[0].vertices;
  CHECK(std::find(row.begin() + 1, row.end() - 1, *diag.shared_vertex) != row.end() - 1);
}

TEST_CASE("containers are valid on every pair") {
  for (auto p : {NetworkParams(3, 3), NetworkParams(4, 4), NetworkParams(5, 4)}) {
    CAPTURE(p.to_string());
    auto vs = testing::all_vertices(p);
    int worst = 0;
    bool ok = true;
    for (const auto& x : vs)
      for (const auto& y : vs) {
        if (x == y) continue;
        auto c = container(x, y, p);
        auto diag = oracle::verify_container(c, p);
        ok = ok && diag.valid && c.src == x && c.dst == y;
        worst = std::max(worst, c.length());
      }
    CHECK(ok);
    CHECK(worst <= p.dee() + 2);
    if (p.dee() >= 4) CHECK(worst == p.dee() + 2);
  }
}

TEST_CASE("containers on a sampled larger instance") {
  NetworkParams p(6, 5);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> pick(0, vertex_count(p) - 1);
  bool ok = true;
  for (int t = 0; t < 2000; ++t) {
    auto x = oracle::lex_unrank(pick(rng), p);
    auto y = oracle::lex_unrank(pick(rng), p);
    if (x == y) continue;
    auto c = container(x, y, p);
    ok = ok && oracle::verify_container(c, p).valid && c.length() <= p.dee() + 2;
  }
  CHECK(ok);
}

TEST_CASE("large symbols out of order are normalised and mapped back") {
  NetworkParams p(7, 4);
  for (auto x : {V("8162"), V("7586"), V("3871"), V("6253")}) {
    CAPTURE(x.to_string());
    CHECK(large_symbol_normalizer(x, p).apply(x) != x);
    auto c = container(x, V("1234"), p);
    CHECK(oracle::verify_container(c, p).valid);
    CHECK(c.length() <= 6);
  }
}

TEST_CASE("lower bound witness") {
  NetworkParams p(4, 4);
  auto w = lower_bound_witness(p);
  CHECK(w.source == V("5432"));
  CHECK(w.target == V("1234"));
  CHECK(w.bottleneck == V("2345"));
  CHECK(w.ok);
  REQUIRE(w.legs.size() == 3);
  CHECK(w.legs[2].i == 4);
  CHECK(w.legs[2].distance != 4);
  CHECK(container(w.source, w.target, p).length() == 6);

  for (auto q : {NetworkParams(5, 4), NetworkParams(5, 5), NetworkParams(6, 6)}) {
    CAPTURE(q.to_string());
    auto wq = lower_bound_witness(q);
    CHECK(wq.ok);
    CHECK(container(wq.source, wq.target, q).length() == q.dee() + 2);
    for (const auto& leg : wq.legs)
      if (leg.i < q.dee()) CHECK(oracle::count_geodesics(leg.start, wq.target, q) == 1);
  }
  CHECK_ERROR_KIND(lower_bound_witness(NetworkParams(4, 3)), ErrorKind::ParameterDomain);
}

// Diagnostic only: disjointness above is checked directly.
TEST_CASE("characteristic triples along containers") {
  for (auto p : {NetworkParams(4, 4), NetworkParams(5, 4), NetworkParams(5, 5)}) {
    CAPTURE(p.to_string());
    auto origin = standard_origin(p);
    std::vector<Symbol> top;
    for (int s = 2; s <= p.dee() + 1; ++s) top.push_back(static_cast<Symbol>(s));
    const Vertex undefined_at(top);
    bool alpha_only_there = true;
    bool distinct = true;
    bool table_one = true;
    for (const auto& x0 : testing::all_vertices(p)) {
      if (x0 == origin) continue;
      auto x = large_symbol_normalizer(x0, p).apply(x0);
      const int k = distance(x, origin, p);
      auto c = container(x, origin, p);
      std::map<CharTriple, std::size_t> owner;
      for (std::size_t j = 0; j < c.paths.size(); ++j) {
        const auto& verts = c.paths[j].vertices;
        const int i = verts.at(1).front();
        for (std::size_t a = 1; a + 1 < verts.size(); ++a) {
          const auto& v = verts[a];
          CharTriple t;
          try {
            t = char_triple(v, p);
          } catch (const Error&) {
            alpha_only_there = alpha_only_there && v == undefined_at;
            continue;
          }
          if (a >= 2) {
            auto [it, fresh] = owner.emplace(t, j);
            distinct = distinct && (fresh || it->second == j);
          }
          if (x.front() != 1) continue;
          // (alpha, beta) bands of the x_1 = 1 routing table
          std::pair<int, int> want;
          if (i < k)
            want = static_cast<int>(a) <= k - i + 1 ? std::pair{i, k + 1} : std::pair{1, i + 1};
          else if (i <= p.dee() + 1)
            want = {1, std::max(i, k) + 1};
          else
            want = {i, p.dee() + 1};
          table_one = table_one && std::pair<int, int>{t.alpha, t.beta} == want;
        }
      }
    }
    CHECK(alpha_only_there);
    CHECK(distinct);
    CHECK(table_one);
  }
}
