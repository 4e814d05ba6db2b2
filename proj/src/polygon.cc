#include "mutanta/polygon.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace mutanta {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Vertices strictly between a and b in label order (a < b).
std::uint64_t open_range(int a, int b) {
  if (b - a < 2) return 0;
  return (bit(b) - 1) & ~(bit(a + 1) - 1);
}

int mod(int x, int m) { return ((x % m) + m) % m; }

std::string describe(const Diagonal& d) {
  return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

void require_member(const Triangulation& t, const Diagonal& d) {
  if (!t.contains(d)) {
    throw std::invalid_argument("diagonal " + describe(d) +
                                " is not in the triangulation");
  }
}

void require_close(const Triangulation& t, const Diagonal& d) {
  require_member(t, d);
  if (!is_close_to_border(d, t.polygon_size())) {
    throw std::invalid_argument("diagonal " + describe(d) +
                                " is not close to the border");
  }
}

// Apex of the triangle on the side of d that contains cut-off / inner
// vertices (inside = labels strictly between a and b).
int apex_inside(const Triangulation& t, const Diagonal& d) {
  const std::uint64_t m = t.edge_mask(d.a) & t.edge_mask(d.b) & open_range(d.a, d.b);
  return std::countr_zero(m);
}

int apex_outside(const Triangulation& t, const Diagonal& d) {
  const int m = t.polygon_size();
  const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : bit(m) - 1;
  const std::uint64_t outside = all & ~open_range(d.a, d.b) & ~bit(d.a) & ~bit(d.b);
  return std::countr_zero(t.edge_mask(d.a) & t.edge_mask(d.b) & outside);
}

}  // namespace

const char* to_string(BorderVertexKind kind) {
  switch (kind) {
    case BorderVertexKind::kSink: return "sink";
    case BorderVertexKind::kSource: return "source";
    case BorderVertexKind::kOnCycle: return "on_cycle";
  }
  return "?";
}

Diagonal make_diagonal(int u, int v, int m) {
  if (m < 4 || m > kMaxPolygonSize) {
    throw std::invalid_argument("polygon size " + std::to_string(m) +
                                " has no diagonals or is too large");
  }
  if (u < 0 || u >= m || v < 0 || v >= m) {
    throw std::invalid_argument("diagonal endpoint out of range");
  }
  if (u == v || distance(u, v, m) == 1) {
    throw std::invalid_argument("(" + std::to_string(u) + "," +
                                std::to_string(v) + ") is not a diagonal");
  }
  return u < v ? Diagonal{u, v} : Diagonal{v, u};
}

Triangulation::Triangulation(int m, std::vector<Diagonal> diagonals)
    : m_(m), diagonals_(std::move(diagonals)) {
  if (m < 3 || m > kMaxPolygonSize) {
    throw std::invalid_argument("polygon size must be in [3, 64], got " +
                                std::to_string(m));
  }
  if (static_cast<int>(diagonals_.size()) != m - 3) {
    throw std::invalid_argument("a triangulation of the " + std::to_string(m) +
                                "-gon has " + std::to_string(m - 3) +
                                " diagonals, got " +
                                std::to_string(diagonals_.size()));
  }
  for (Diagonal& d : diagonals_) d = make_diagonal(d.a, d.b, m);
  std::sort(diagonals_.begin(), diagonals_.end());
  if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end()) {
    throw std::invalid_argument("duplicate diagonal");
  }
  for (std::size_t i = 0; i < diagonals_.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonals_.size(); ++j) {
      if (crosses(diagonals_[i], diagonals_[j], m)) {
        throw std::invalid_argument("diagonals " + describe(diagonals_[i]) +
                                    " and " + describe(diagonals_[j]) +
                                    " cross");
      }
    }
  }
  adjacency_.assign(m, 0);
  for (int v = 0; v < m; ++v) {
    adjacency_[v] |= bit(mod(v + 1, m)) | bit(mod(v - 1, m));
  }
  for (const Diagonal& d : diagonals_) {
    adjacency_[d.a] |= bit(d.b);
    adjacency_[d.b] |= bit(d.a);
  }
}

int Triangulation::index_of(const Diagonal& d) const {
  auto it = std::lower_bound(diagonals_.begin(), diagonals_.end(), d);
  if (it == diagonals_.end() || *it != d) return -1;
  return static_cast<int>(it - diagonals_.begin());
}

int distance(int a, int b, int m) {
  const int forward = mod(b - a, m);
  return std::min(forward, m - forward);
}

bool crosses(const Diagonal& d1, const Diagonal& d2, int /*m*/) {
  if (d1.a == d2.a || d1.a == d2.b || d1.b == d2.a || d1.b == d2.b) {
    return false;
  }
  auto inside = [&](int x) { return d1.a < x && x < d1.b; };
  return inside(d2.a) != inside(d2.b);
}

bool is_close_to_border(const Diagonal& d, int m) {
  return distance(d.a, d.b, m) == 2;
}

Triangulation fan_triangulation(int m, int apex) {
  if (m < 4 || m > kMaxPolygonSize) {
    throw std::invalid_argument("fan needs a polygon with 4..64 vertices");
  }
  if (apex < 0 || apex >= m) throw std::invalid_argument("apex out of range");
  std::vector<Diagonal> ds;
  for (int k = 2; k <= m - 2; ++k) ds.push_back(make_diagonal(apex, mod(apex + k, m), m));
  return Triangulation(m, std::move(ds));
}

std::vector<Triangle> triangles(const Triangulation& t) {
  const int m = t.polygon_size();
  std::vector<Triangle> out;
  out.reserve(m - 2);
  // Each triangle a < b < c is found once, from its side (a, c).
  auto add = [&](int a, int c) {
    const std::uint64_t apex = t.edge_mask(a) & t.edge_mask(c) & open_range(a, c);
    out.push_back({a, std::countr_zero(apex), c});
  };
  for (const Diagonal& d : t.diagonals()) add(d.a, d.b);
  add(0, m - 1);
  std::sort(out.begin(), out.end());
  return out;
}

Quiver quiver_of(const Triangulation& t) {
  const int m = t.polygon_size();
  if (m < 4) throw std::invalid_argument("the triangle has an empty quiver");
  std::vector<Arrow> arrows;
  for (const Triangle& tri : triangles(t)) {
    const int corner[3] = {tri.a, tri.b, tri.c};
    for (int i = 0; i < 3; ++i) {
      // Sides at corner p run to the two other corners x and y.
      const int p = corner[i];
      const int x = corner[(i + 1) % 3];
      const int y = corner[(i + 2) % 3];
      if (distance(p, x, m) == 1 || distance(p, y, m) == 1) continue;
      const int vx = t.index_of(make_diagonal(p, x, m));
      const int vy = t.index_of(make_diagonal(p, y, m));
      // Anticlockwise about p moves the far end to smaller offsets from p.
      if (mod(x - p, m) > mod(y - p, m)) {
        arrows.push_back({vx, vy});
      } else {
        arrows.push_back({vy, vx});
      }
    }
  }
  return Quiver(t.rank(), std::move(arrows));
}

Diagonal flip_partner(const Triangulation& t, const Diagonal& d) {
  require_member(t, d);
  return make_diagonal(apex_inside(t, d), apex_outside(t, d), t.polygon_size());
}

Triangulation flip(const Triangulation& t, const Diagonal& d) {
  const Diagonal partner = flip_partner(t, d);
  std::vector<Diagonal> ds = t.diagonals();
  ds[t.index_of(d)] = partner;
  return Triangulation(t.polygon_size(), std::move(ds));
}

Triangulation rotate(const Triangulation& t, int i) {
  const int m = t.polygon_size();
  std::vector<Diagonal> ds;
  ds.reserve(t.rank());
  for (const Diagonal& d : t.diagonals()) {
    const int a = mod(d.a + i, m);
    const int b = mod(d.b + i, m);
    ds.push_back(a < b ? Diagonal{a, b} : Diagonal{b, a});
  }
  return Triangulation(m, std::move(ds));
}

RotationClass rotation_canonical(const Triangulation& t) {
  const int m = t.polygon_size();
  Triangulation best = t;
  int period = m;
  for (int s = 1; s < m; ++s) {
    Triangulation r = rotate(t, s);
    if (period == m && r == t) period = s;
    if (r.diagonals() < best.diagonals()) best = std::move(r);
  }
  return {std::move(best), period};
}

int cut_off_vertex(const Diagonal& d, int m) {
  if (d.b - d.a == 2) return d.a + 1;
  if (d.b - d.a == m - 2) return mod(d.b + 1, m);
  throw std::invalid_argument("diagonal " + describe(d) +
                              " is not close to the border");
}

BorderVertexKind classify_close_diagonal(const Triangulation& t,
                                         const Diagonal& d) {
  require_close(t, d);
  const int m = t.polygon_size();
  const int c = cut_off_vertex(d, m);
  const int apex = (c == d.a + 1) ? apex_outside(t, d) : apex_inside(t, d);
  const bool side_a = distance(d.a, apex, m) > 1;
  const bool side_b = distance(d.b, apex, m) > 1;
  if (side_a && side_b) return BorderVertexKind::kOnCycle;
  if (!side_a && !side_b) return BorderVertexKind::kSink;
  // A single neighbour, sharing corner p with d.
  const int p = side_a ? d.a : d.b;
  const int far = side_a ? d.b : d.a;
  return mod(far - p, m) > mod(apex - p, m) ? BorderVertexKind::kSource
                                            : BorderVertexKind::kSink;
}

Triangulation factor_out(const Triangulation& t, const Diagonal& d) {
  require_close(t, d);
  const int c = cut_off_vertex(d, t.polygon_size());
  auto shift = [c](int v) { return v > c ? v - 1 : v; };
  std::vector<Diagonal> ds;
  for (const Diagonal& x : t.diagonals()) {
    if (x == d) continue;
    ds.push_back({shift(x.a), shift(x.b)});
  }
  return Triangulation(t.polygon_size() - 1, std::move(ds));
}

Diagonal extension_diagonal(int m, int e) {
  if (e < 0 || e >= m) {
    throw std::invalid_argument("border edge index " + std::to_string(e) +
                                " out of range");
  }
  const int next = e + 1 < m ? e + 2 : 0;
  return make_diagonal(e, next, m + 1);
}

Triangulation extend_at(const Triangulation& t, int e) {
  const int m = t.polygon_size();
  const Diagonal added = extension_diagonal(m, e);
  auto shift = [e](int v) { return v > e ? v + 1 : v; };
  std::vector<Diagonal> ds;
  ds.reserve(t.rank() + 1);
  for (const Diagonal& x : t.diagonals()) ds.push_back({shift(x.a), shift(x.b)});
  ds.push_back(added);
  return Triangulation(m + 1, std::move(ds));
}

}  // namespace mutanta
