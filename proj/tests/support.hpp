#pragma once

#include <doctest.h>

#include <functional>
#include <string>
#include <vector>

#include "cycleprefix/oracle.hpp"
#include "cycleprefix/topology.hpp"

namespace testing {

using namespace cycleprefix;

inline Vertex V(const std::string& text) { return Vertex::parse(text); }

inline std::vector<Vertex> all_vertices(const NetworkParams& p) {
  std::vector<Vertex> out;
  const auto n = vertex_count(p);
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(oracle::lex_unrank(i, p));
  return out;
}

// Every instance with delta <= 7 and at most `cap` vertices, for the given r.
inline std::vector<NetworkParams> small_instances(int r, std::uint64_t cap = 2520) {
  std::vector<NetworkParams> out;
  for (int delta = 2; delta <= 7; ++delta)
    for (int dee = std::max(2, r + 1); dee <= delta; ++dee) {
      NetworkParams p(delta, dee, r);
      if (vertex_count(p) <= cap) out.push_back(p);
    }
  return out;
}

}  // namespace testing

#define CHECK_ERROR_KIND(expr, expected_kind)                            \
  do {                                                                   \
    bool thrown_ = false;                                                \
    try {                                                                \
      (void)(expr);                                                      \
    } catch (const ::cycleprefix::Error& e_) {                           \
      thrown_ = true;                                                    \
      CHECK(e_.kind() == (expected_kind));                               \
    }                                                                    \
    CHECK_MESSAGE(thrown_, "expected cycleprefix::Error from " #expr);   \
  } while (false)
