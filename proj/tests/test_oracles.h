// Brute-force oracles used only by tests. None of them calls into the
// canonical labeling, the ear decomposition or the bitmask mutation.

#ifndef MUTANTA_TESTS_TEST_ORACLES_H_
#define MUTANTA_TESTS_TEST_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "mutanta/combinatorics.h"
#include "mutanta/polygon.h"
#include "mutanta/quiver.h"

namespace mutanta::oracle {

using Matrix = std::vector<std::vector<int>>;

// Skew-symmetric exchange matrix: b[i][j] = 1 for i -> j, -1 for j -> i.
inline Matrix exchange_matrix(const Quiver& q) {
  Matrix b(q.size(), std::vector<int>(q.size(), 0));
  for (const Arrow& a : q.arrows()) {
    b[a.from][a.to] += 1;
    b[a.to][a.from] -= 1;
  }
  return b;
}

// Matrix mutation: b'_ij = -b_ij if k in {i, j}, else
// b_ij + sgn(b_ik) max(b_ik b_kj, 0).
inline Matrix matrix_mutation(const Matrix& b, int k) {
  const int n = static_cast<int>(b.size());
  Matrix out = b;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out[i][j] = -b[i][j];
      } else {
        const int sgn = (b[i][k] > 0) - (b[i][k] < 0);
        out[i][j] = b[i][j] + sgn * std::max(b[i][k] * b[k][j], 0);
      }
    }
  }
  return out;
}

// Smallest sorted arrow list over all n! relabelings.
inline std::vector<Arrow> min_relabeling(const Quiver& q) {
  std::vector<int> perm(q.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Arrow> best;
  bool first = true;
  do {
    std::vector<Arrow> arrows;
    for (const Arrow& a : q.arrows()) arrows.push_back({perm[a.from], perm[a.to]});
    std::sort(arrows.begin(), arrows.end());
    if (first || arrows < best) best = arrows;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic_by_search(const Quiver& a, const Quiver& b) {
  if (a.size() != b.size() || a.arrows().size() != b.arrows().size()) return false;
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const Arrow& x : a.arrows()) {
      if (!b.has_arrow(perm[x.from], perm[x.to])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Simple cycles of the underlying undirected graph, each as its vertex
// sequence starting from its smallest vertex.
inline std::vector<std::vector<int>> simple_cycles(const Quiver& q) {
  const int n = q.size();
  auto adjacent = [&](int u, int v) { return q.has_arrow(u, v) || q.has_arrow(v, u); };
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<bool> used(n, false);
  std::function<void(int)> extend = [&](int start) {
    const int last = path.back();
    for (int v = start + 1; v < n; ++v) {
      if (used[v] || !adjacent(last, v)) continue;
      used[v] = true;
      path.push_back(v);
      if (path.size() >= 3 && adjacent(v, start) && path[1] < v) cycles.push_back(path);
      extend(start);
      path.pop_back();
      used[v] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, false);
    used[s] = true;
    extend(s);
  }
  return cycles;
}

inline bool connected_by_search(const Quiver& q) {
  std::vector<bool> seen(q.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < q.size(); ++v) {
      if (!seen[v] && (q.has_arrow(u, v) || q.has_arrow(v, u))) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

// Connected, every simple cycle is a directed 3-cycle, no two 3-cycles share
// an arrow.
inline bool type_a_by_cycles(const Quiver& q) {
  if (!connected_by_search(q)) return false;
  std::vector<std::set<Arrow>> triangles;
  for (const auto& c : simple_cycles(q)) {
    if (c.size() != 3) return false;
    std::set<Arrow> arrows;
    for (int i = 0; i < 3; ++i) {
      const int u = c[i], v = c[(i + 1) % 3];
      arrows.insert(q.has_arrow(u, v) ? Arrow{u, v} : Arrow{v, u});
    }
    const bool forward = q.has_arrow(c[0], c[1]) && q.has_arrow(c[1], c[2]) &&
                         q.has_arrow(c[2], c[0]);
    const bool backward = q.has_arrow(c[1], c[0]) && q.has_arrow(c[2], c[1]) &&
                          q.has_arrow(c[0], c[2]);
    if (!forward && !backward) return false;
    triangles.push_back(arrows);
  }
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    for (std::size_t j = i + 1; j < triangles.size(); ++j) {
      for (const Arrow& a : triangles[i]) {
        if (triangles[j].contains(a)) return false;
      }
    }
  }
  return true;
}

// Segment intersection on the regular m-gon, vertices placed clockwise.
inline bool crosses_geometrically(const Diagonal& d1, const Diagonal& d2, int m) {
  auto point = [m](int v) {
    const double angle = -2.0 * M_PI * v / m;
    return std::pair{std::cos(angle), std::sin(angle)};
  };
  auto orient = [](std::pair<double, double> p, std::pair<double, double> q,
                   std::pair<double, double> r) {
    const double x = (q.first - p.first) * (r.second - p.second) -
                     (q.second - p.second) * (r.first - p.first);
    return x > 1e-12 ? 1 : (x < -1e-12 ? -1 : 0);
  };
  const auto a = point(d1.a), b = point(d1.b), c = point(d2.a), d = point(d2.b);
  const int o1 = orient(a, b, c), o2 = orient(a, b, d);
  const int o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

inline std::vector<Diagonal> all_diagonals(int m) {
  std::vector<Diagonal> out;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 2; b < m; ++b) {
      if (a == 0 && b == m - 1) continue;
      out.push_back({a, b});
    }
  }
  return out;
}

// All maximal non-crossing diagonal sets, by scanning every subset.
inline std::set<std::vector<Diagonal>> triangulations_by_subsets(int m) {
  const auto all = all_diagonals(m);
  const int count = static_cast<int>(all.size());
  std::set<std::vector<Diagonal>> out;
  for (std::uint32_t mask = 0; mask < (1u << count); ++mask) {
    if (std::popcount(mask) != m - 3) continue;
    std::vector<Diagonal> chosen;
    for (int i = 0; i < count; ++i) {
      if (mask >> i & 1u) chosen.push_back(all[i]);
    }
    bool ok = true;
    for (std::size_t i = 0; i < chosen.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < chosen.size() && ok; ++j) {
        ok = !crosses_geometrically(chosen[i], chosen[j], m);
      }
    }
    if (ok) out.insert(chosen);
  }
  return out;
}

inline BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// (2i)! / ((i+1)! i!) evaluated literally.
inline BigInt catalan_by_factorials(int i) {
  return factorial(2 * i) / (factorial(i + 1) * factorial(i));
}

}  // namespace mutanta::oracle

#endif  // MUTANTA_TESTS_TEST_ORACLES_H_
