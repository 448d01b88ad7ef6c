#pragma once

// Brute-force reference computations shared by the unit tests and the
// acceptance binary. Everything here uses plain int64 arithmetic and is
// deliberately independent of the library's reduction code.

#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "hecke/classify.hpp"
#include "hecke/elements.hpp"

namespace oracle {

using Small = std::array<long, 4>;

inline Small norm(Small m) {
  if (m[2] < 0 || (m[2] == 0 && m[0] < 0))
    for (auto& x : m) x = -x;
  return m;
}

inline Small mul(const Small& x, const Small& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

inline Small inv1(const Small& g) { return {g[3], -g[1], -g[2], g[0]}; }

inline hecke::ProjMatrix to_proj(const Small& m) {
  return hecke::ProjMatrix::from(std::int64_t{m[0]}, std::int64_t{m[1]}, std::int64_t{m[2]},
                                 std::int64_t{m[3]});
}

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int a, int b) { p[find(a)] = find(b); }
};

// Products of all freely reduced words of length <= max_len in S, U, U^2.
inline std::vector<Small> short_words(int max_len) {
  const Small gen[3] = {{0, -1, 1, 0}, {1, -1, 1, 0}, {0, -1, 1, -1}};
  std::vector<Small> out{{1, 0, 0, 1}};
  std::vector<std::pair<Small, int>> frontier{{{1, 0, 0, 1}, -1}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<Small, int>> next;
    for (const auto& [g, last] : frontier)
      for (int x = 0; x < 3; ++x) {
        if (last == 0 && x == 0) continue;
        if (last >= 1 && x >= 1) continue;  // UU = U^2, UU^2 = 1
        Small h = norm(mul(g, gen[x]));
        next.push_back({h, x});
        out.push_back(h);
      }
    frontier = std::move(next);
  }
  return out;
}

struct ConjugacyOracleResult {
  std::size_t box_size = 0;
  std::size_t classes = 0;
  // Search joined two matrices whose keys differ: the keys are wrong.
  int joined_but_keys_differ = 0;
  // Keys agree but the word search never joined the matrices.
  std::vector<hecke::qf::ConjClassKey> keys_not_joined;
  // Of those, the ones a bounded breadth-first search of the conjugation
  // graph also failed to connect.
  std::vector<hecke::qf::ConjClassKey> keys_not_connected_by_bfs;
  int max_bfs_distance = 0;
};

/// All canonical matrices with 1 <= det <= max_det and |entries| <= bound;
/// union-find over conjugation by words of length <= max_len, compared with
/// conjugacy_key. Classes the word search leaves split are then re-examined
/// with a BFS over conjugation by S, U, U^2 through matrices with entries up
/// to bfs_bound.
inline ConjugacyOracleResult conjugacy_oracle(long max_det, long bound, int max_len, long bfs_bound) {
  ConjugacyOracleResult res;
  const std::vector<Small> gammas = short_words(max_len);
  std::vector<Small> box;
  std::map<Small, int> index;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = 0; c <= bound; ++c)
        for (long d = -bound; d <= bound; ++d) {
          const long det = a * d - b * c;
          if (det < 1 || det > max_det) continue;
          if (c == 0 && a <= 0) continue;
          index[{a, b, c, d}] = static_cast<int>(box.size());
          box.push_back({a, b, c, d});
        }
  res.box_size = box.size();

  DSU dsu(static_cast<int>(box.size()));
  for (std::size_t i = 0; i < box.size(); ++i)
    for (const Small& g : gammas) {
      auto it = index.find(norm(mul(mul(inv1(g), box[i]), g)));
      if (it != index.end()) dsu.join(static_cast<int>(i), it->second);
    }

  std::map<int, hecke::qf::ConjClassKey> key_of_component;
  std::map<hecke::qf::ConjClassKey, std::vector<int>> members;
  for (std::size_t i = 0; i < box.size(); ++i) {
    const auto k = hecke::qf::conjugacy_key(to_proj(box[i]));
    auto [it, fresh] = key_of_component.try_emplace(dsu.find(static_cast<int>(i)), k);
    if (it->second != k) ++res.joined_but_keys_differ;
    members[k].push_back(static_cast<int>(i));
  }
  res.classes = members.size();

  const Small gen[3] = {{0, -1, 1, 0}, {1, -1, 1, 0}, {0, -1, 1, -1}};
  for (const auto& [k, idx] : members) {
    std::set<int> roots;
    for (int i : idx) roots.insert(dsu.find(i));
    if (roots.size() <= 1) continue;
    res.keys_not_joined.push_back(k);

    std::set<Small> targets;
    for (int i : idx) targets.insert(box[i]);
    std::map<Small, int> dist{{box[idx[0]], 0}};
    std::deque<Small> q{box[idx[0]]};
    std::size_t found = 1;
    while (!q.empty() && found < targets.size()) {
      const Small m = q.front();
      q.pop_front();
      for (const Small& g : gen) {
        const Small n = norm(mul(mul(inv1(g), m), g));
        bool inside = true;
        for (long x : n) inside = inside && x >= -bfs_bound && x <= bfs_bound;
        if (!inside || dist.count(n)) continue;
        dist[n] = dist[m] + 1;
        if (targets.count(n)) {
          ++found;
          res.max_bfs_distance = std::max(res.max_bfs_distance, dist[n]);
        }
        q.push_back(n);
      }
    }
    if (found < targets.size()) res.keys_not_connected_by_bfs.push_back(k);
  }
  return res;
}

}  // namespace oracle

namespace oracle {

/// Every canonical matrix of determinant n with entries bounded by `bound`
/// satisfying the descriptor, with its weight. Solves for b when c > 0.
inline hecke::RingElement box_enumeration(const hecke::elem::Descriptor& desc, long n, long bound) {
  hecke::RingElement out;
  auto visit = [&](const hecke::elem::Entries& m) {
    if (desc.satisfies(m)) out.add(to_proj({m[0], m[1], m[2], m[3]}), hecke::elem::weight_c(m, desc));
  };
  for (long c = 1; c <= bound; ++c)
    for (long a = -bound; a <= bound; ++a)
      for (long d = -bound; d <= bound; ++d) {
        const long num = a * d - n;
        if (num % c != 0) continue;
        const long b = num / c;
        if (b < -bound || b > bound) continue;
        visit({a, b, c, d});
      }
  for (long a = 1; a <= bound; ++a)
    for (long d = -bound; d <= bound; ++d) {
      if (a * d != n) continue;
      for (long b = -bound; b <= bound; ++b) visit({a, b, 0, d});
    }
  return out;
}

}  // namespace oracle
