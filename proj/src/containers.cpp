#include "cycleprefix/containers.hpp"

#include <algorithm>

#include "cycleprefix/routing.hpp"

namespace cycleprefix {

namespace {

void require_full_graph(const NetworkParams& params) {
  if (params.r() != 0)
    throw Error(ErrorKind::ParameterDomain, "containers are constructed in Gamma_delta(D) only (r = 0)");
}

// Normalised source together with its distance to the origin.
struct Normalized {
  Relabeling tau;
  Vertex x;
  int k;
};

Normalized normalize(const Vertex& x, const NetworkParams& params) {
  require_full_graph(params);
  validate(x, params);
  auto origin = standard_origin(params);
  if (x == origin) throw Error(ErrorKind::SameVertex, "source coincides with the origin");
  auto tau = large_symbol_normalizer(x, params);
  auto xn = tau.apply(x);
  return {tau, xn, distance(xn, origin, params)};
}

SourceCase classify(const Vertex& x, int k) {
  if (x.front() == 1) return SourceCase::LeadsWithOne;
  if (x.front() == k + 1) return SourceCase::LeadsPastHeader;
  return SourceCase::General;
}

void check_domain(const Normalized& n, Symbol i, const NetworkParams& params) {
  if (!params.in_alphabet(i)) throw Error(ErrorKind::SymbolOutOfAlphabet, "symbol " + std::to_string(i));
  if (i == n.x.front()) throw Error(ErrorKind::DomainError, "i equals x_1, so i o X = X is not a neighbour");
  if (compose(i, n.x, params) == standard_origin(params))
    throw Error(ErrorKind::DomainError, "i o X is the destination itself");
}

// theta index in normalised coordinates
int theta_index(const Normalized& n, Symbol i) {
  const int k = n.k;
  switch (classify(n.x, k)) {
    case SourceCase::LeadsWithOne:
      return i;
    case SourceCase::LeadsPastHeader: {
      int b1 = beta(n.x, 1, k);
      if (i == 1) return k;
      if (i < k) return i;
      if (i == k) return b1 - 1;
      if (i < b1) return i - 1;
      return i;
    }
    case SourceCase::General: {
      int b1 = beta(n.x, 1, k);
      if (i == 1) return b1 - 1;
      if (i < k) return i;
      if (i == k) return alpha(n.x, k);
      if (i < b1) return i - 1;
      return i;
    }
  }
  return i;
}

int leg_index(const Normalized& n, Symbol i, int dee) {
  // Hop counts read off the routing tables: the leg starts at i o X and
  // composes the listed symbols in order.
  const int k = n.k;
  switch (classify(n.x, k)) {
    case SourceCase::LeadsWithOne:
      if (i < k) return k;
      if (i == k) return k - 2;
      if (i <= dee) return i - 2;
      return dee - 1;
    case SourceCase::LeadsPastHeader: {
      int b1 = beta(n.x, 1, k);
      if (i == 1) return k - 1;
      if (i < k) return k;
      if (i == k) return k - 2;
      if (i < b1) return i - 1;
      if (i <= dee + 1) return i - 2;
      return dee - 1;
    }
    case SourceCase::General: {
      int b1 = beta(n.x, 1, k);
      if (i == 1) return b1 - 2;
      if (i < k) return k;
      if (i == k) return k - 1;
      if (i < b1) return i - 1;
      if (i <= dee + 1) return i - 2;
      return dee - 1;
    }
  }
  return 0;
}

}  // namespace

Symbol alpha(const Vertex& x, int k) {
  const int dee = x.size();
  for (auto s : x.symbols())
    if (s <= k || s > dee + 1) return s;
  throw Error(ErrorKind::UndefinedAlpha, "every symbol of " + x.to_string() + " lies in {" +
                                             std::to_string(k + 1) + ".." + std::to_string(dee + 1) + "}");
}

int beta(const Vertex& x, Symbol i, int k) {
  const int dee = x.size();
  const int pos_i = x.position_of(i);
  for (int s = k + 1; s <= dee + 1; ++s) {
    int pos = x.position_of(static_cast<Symbol>(s));
    if (pos == 0 || (pos_i != 0 && pos > pos_i)) return s;
  }
  return dee + 2;
}

CharTriple char_triple(const Vertex& v, const NetworkParams& params) {
  require_full_graph(params);
  validate(v, params);
  auto origin = standard_origin(params);
  if (v == origin) throw Error(ErrorKind::DomainError, "characteristic statistics need v != origin");
  int k = distance(v, origin, params);
  Symbol a = alpha(v, k);
  return {a, beta(v, a, k), beta(v, 1, k)};
}

Relabeling large_symbol_normalizer(const Vertex& x, const NetworkParams& params) {
  validate(x, params);
  const int dee = params.dee();
  std::vector<Symbol> images(static_cast<std::size_t>(params.alphabet_size()), 0);
  for (int s = 1; s <= dee; ++s) images[static_cast<std::size_t>(s - 1)] = static_cast<Symbol>(s);
  Symbol next = static_cast<Symbol>(dee + 1);
  for (auto s : x.symbols())
    if (s > dee) images[s - 1u] = next++;
  for (auto& img : images)
    if (img == 0) img = next++;
  return Relabeling::from_images(std::move(images));
}

SourceCase source_case(const Vertex& x, const NetworkParams& params) {
  auto n = normalize(x, params);
  return classify(n.x, n.k);
}

int theta(const Vertex& x, Symbol i, const NetworkParams& params) {
  auto n = normalize(x, params);
  Symbol in = n.tau(i);
  check_domain(n, in, params);
  int j = theta_index(n, in);
  return j > params.dee() ? n.tau.inverse()(static_cast<Symbol>(j)) : j;
}

int leg_distance(const Vertex& x, Symbol i, const NetworkParams& params) {
  auto n = normalize(x, params);
  Symbol in = n.tau(i);
  check_domain(n, in, params);
  return leg_index(n, in, params.dee());
}

Vertex origin_in_neighbor(int j, const NetworkParams& params) {
  const int dee = params.dee();
  if (j < 2 || j > params.alphabet_size())
    throw Error(ErrorKind::IndexOutOfRange, "in-neighbour index " + std::to_string(j));
  std::vector<Symbol> seq;
  if (j <= dee) {
    for (int s = 2; s <= j; ++s) seq.push_back(static_cast<Symbol>(s));
    seq.push_back(1);
    for (int s = j + 1; s <= dee; ++s) seq.push_back(static_cast<Symbol>(s));
  } else {
    for (int s = 2; s <= dee; ++s) seq.push_back(static_cast<Symbol>(s));
    seq.push_back(static_cast<Symbol>(j));
  }
  return Vertex(std::move(seq));
}

Container container(const Vertex& x, const Vertex& y, const NetworkParams& params) {
  require_full_graph(params);
  validate(x, params);
  validate(y, params);
  if (x == y) throw Error(ErrorKind::SameVertex, "a container needs distinct endpoints");

  auto sigma = Relabeling::normalizing(y, params);
  auto n = normalize(sigma.apply(x), params);
  auto to_original = sigma.then(n.tau).inverse();
  auto origin = standard_origin(params);

  Container c{n.x, origin, {}};
  for (int s = 1; s <= params.alphabet_size(); ++s) {
    auto i = static_cast<Symbol>(s);
    if (i == n.x.front()) continue;
    auto z = compose(i, n.x, params);
    if (z == origin) {
      c.paths.push_back(Path{{n.x, origin}});
      continue;
    }
    auto end = origin_in_neighbor(theta_index(n, i), params);
    Path p{{n.x}};
    if (z == end) {
      p.vertices.push_back(z);
    } else {
      auto leg = shortest_path(z, end, params);
      p.vertices.insert(p.vertices.end(), leg.vertices.begin(), leg.vertices.end());
    }
    p.vertices.push_back(origin);
    c.paths.push_back(std::move(p));
  }
  return relabel(c, to_original);
}

LowerBoundWitness lower_bound_witness(const NetworkParams& params) {
  require_full_graph(params);
  const int dee = params.dee();
  const int delta = params.delta();
  if (dee < 4) throw Error(ErrorKind::ParameterDomain, "the D + 2 lower bound needs D >= 4");

  std::vector<Symbol> top;
  for (int s = delta + 1; s >= delta - dee + 2; --s) top.push_back(static_cast<Symbol>(s));
  std::vector<Symbol> neck;
  for (int s = 2; s <= dee; ++s) neck.push_back(static_cast<Symbol>(s));
  neck.push_back(static_cast<Symbol>(delta + 1));

  LowerBoundWitness w{Vertex(std::move(top)), standard_origin(params), Vertex(std::move(neck)), {}, true};
  for (int s = 2; s <= dee; ++s) {
    auto i = static_cast<Symbol>(s);
    auto start = compose(i, w.source, params);
    int d = distance(start, w.target, params);
    bool through = false;
    if (start != w.target) {
      auto path = shortest_path(start, w.target, params);
      through = std::find(path.vertices.begin(), path.vertices.end(), w.bottleneck) != path.vertices.end();
    }
    w.legs.push_back({i, start, d, through});
    if (s < dee && (d != dee || !through)) w.ok = false;
  }
  return w;
}

}  // namespace cycleprefix
