#ifndef MUTANTA_POLYGON_H_
#define MUTANTA_POLYGON_H_

#include <compare>
#include <cstdint>
#include <vector>

#include "mutanta/quiver.h"

namespace mutanta {

// Polygon vertices are labeled 0..m-1 in clockwise order, so one clockwise
// step is +1 mod m and "anticlockwise" means towards decreasing labels.
inline constexpr int kMaxPolygonSize = 64;

// Unordered pair of non-adjacent polygon vertices, stored with a < b.
struct Diagonal {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

// Normalizes the endpoint order. Throws std::invalid_argument unless u and v
// are distinct, non-adjacent vertices of the m-gon.
Diagonal make_diagonal(int u, int v, int m);

// A maximal set of pairwise non-crossing diagonals of the m-gon (m - 3 of
// them). Diagonals are kept sorted; the position of a diagonal in that list
// is its vertex index in quiver_of(). m == 3 (no diagonals) is allowed so that
// factoring a square is representable.
class Triangulation {
 public:
  Triangulation(int m, std::vector<Diagonal> diagonals);

  int polygon_size() const { return m_; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }
  int rank() const { return static_cast<int>(diagonals_.size()); }

  // -1 if d is not in the triangulation.
  int index_of(const Diagonal& d) const;
  bool contains(const Diagonal& d) const { return index_of(d) >= 0; }

  // Bitmask of vertices joined to v by a border edge or a diagonal.
  std::uint64_t edge_mask(int v) const { return adjacency_[v]; }

  friend bool operator==(const Triangulation& x, const Triangulation& y) {
    return x.m_ == y.m_ && x.diagonals_ == y.diagonals_;
  }
  friend auto operator<=>(const Triangulation& x, const Triangulation& y) {
    if (auto c = x.m_ <=> y.m_; c != 0) return c;
    return x.diagonals_ <=> y.diagonals_;
  }

 private:
  int m_;
  std::vector<Diagonal> diagonals_;
  std::vector<std::uint64_t> adjacency_;
};

struct Triangle {
  int a, b, c;  // a < b < c

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

struct RotationClass {
  Triangulation representative;
  int orbit_size;
};

enum class BorderVertexKind { kSink, kSource, kOnCycle };

const char* to_string(BorderVertexKind kind);

// Number of border edges on the shorter way round from a to b.
int distance(int a, int b, int m);

// Strict interleaving of endpoints; diagonals sharing an endpoint never cross.
bool crosses(const Diagonal& d1, const Diagonal& d2, int m);

bool is_close_to_border(const Diagonal& d, int m);

// Diagonals apex <-> apex+2, ..., apex <-> apex+m-2 (mod m).
Triangulation fan_triangulation(int m, int apex);

// The m - 2 triangles, sorted.
std::vector<Triangle> triangles(const Triangulation& t);

// One quiver vertex per diagonal, indexed by position in t.diagonals(). Two
// diagonals on a common triangle sharing polygon vertex p are joined by an
// arrow from the one whose anticlockwise rotation about p reaches the other.
// Requires m >= 4.
Quiver quiver_of(const Triangulation& t);

// The other diagonal of the quadrilateral around d. Throws
// std::invalid_argument if d is not in t.
Diagonal flip_partner(const Triangulation& t, const Diagonal& d);
Triangulation flip(const Triangulation& t, const Diagonal& d);

// Rotates i steps clockwise (labels +i mod m). Negative i rotates back.
Triangulation rotate(const Triangulation& t, int i);

// Lexicographically smallest rotation and the number of distinct rotations.
RotationClass rotation_canonical(const Triangulation& t);

// The only border vertex strictly between the endpoints of a diagonal that
// is close to the border. For the square, the vertex a + 1 is chosen.
int cut_off_vertex(const Diagonal& d, int m);

// Whether v_d is a sink, source, or on a 3-cycle of quiver_of(t), decided
// from the triangle on the far side of d. In the square the lone vertex is
// reported as a sink. Throws std::invalid_argument unless d is in t and is
// close to the border.
BorderVertexKind classify_close_diagonal(const Triangulation& t,
                                         const Diagonal& d);

// Makes d a border edge by deleting cut_off_vertex(d) and compacting labels.
Triangulation factor_out(const Triangulation& t, const Diagonal& d);

// Inserts a vertex on border edge (e, e+1 mod m); the old edge becomes a new
// diagonal close to the border. Labels above e shift by one.
Triangulation extend_at(const Triangulation& t, int e);

// The diagonal added by extend_at(t, e), in the labels of the (m+1)-gon.
Diagonal extension_diagonal(int m, int e);

}  // namespace mutanta

#endif  // MUTANTA_POLYGON_H_
