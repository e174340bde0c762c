#include "cycleprefix/walk.hpp"

#include <algorithm>
#include <unordered_set>

namespace cycleprefix {

bool Walk::has_distinct_vertices() const {
  std::unordered_set<Vertex> seen;
  for (const auto& v : vertices)
    if (!seen.insert(v).second) return false;
  return true;
}

bool is_valid_walk(const Walk& walk, const NetworkParams& params) {
  if (walk.vertices.empty()) return false;
  for (const auto& v : walk.vertices) {
    if (v.size() != params.dee()) return false;
    for (auto s : v.symbols())
      if (!params.in_alphabet(s)) return false;
  }
  for (std::size_t i = 1; i < walk.vertices.size(); ++i)
    if (!is_arc(walk.vertices[i - 1], walk.vertices[i], params)) return false;
  return true;
}

std::vector<ArcOp> hop_operations(const Walk& walk, const NetworkParams& params) {
  std::vector<ArcOp> ops;
  for (std::size_t i = 1; i < walk.vertices.size(); ++i) {
    auto op = arc_between(walk.vertices[i - 1], walk.vertices[i], params);
    if (!op)
      throw Error(ErrorKind::DomainError, walk.vertices[i - 1].to_string() + " -> " +
                                              walk.vertices[i].to_string() + " is not an arc of " +
                                              params.to_string());
    ops.push_back(*op);
  }
  return ops;
}

Walk relabel(const Walk& walk, const Relabeling& sigma) {
  Walk out;
  out.vertices.reserve(walk.vertices.size());
  for (const auto& v : walk.vertices) out.vertices.push_back(sigma.apply(v));
  return out;
}

int Container::length() const {
  int best = 0;
  for (const auto& p : paths) best = std::max(best, p.length());
  return best;
}

Container relabel(const Container& c, const Relabeling& sigma) {
  Container out{sigma.apply(c.src), sigma.apply(c.dst), {}};
  out.paths.reserve(c.paths.size());
  for (const auto& p : c.paths) out.paths.push_back(relabel(p, sigma));
  return out;
}

}  // namespace cycleprefix
