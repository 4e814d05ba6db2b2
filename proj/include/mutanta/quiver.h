#ifndef MUTANTA_QUIVER_H_
#define MUTANTA_QUIVER_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mutanta {

// Vertices are stored as bit positions in 64-bit adjacency masks.
inline constexpr int kMaxQuiverVertices = 64;

struct Arrow {
  int from = 0;
  int to = 0;

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

// A finite directed graph on vertices 0..n-1 with no loops, no 2-cycles and
// no parallel arrows. Arrows are kept sorted, so equality is exact labeled
// equality. Immutable after construction.
class Quiver {
 public:
  // Throws std::invalid_argument if n is outside [1, kMaxQuiverVertices] or
  // the arrow list contains a loop, a 2-cycle, a duplicate, or an endpoint
  // out of range.
  Quiver(int n, std::vector<Arrow> arrows);

  int size() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  bool has_arrow(int from, int to) const {
    return (out_[from] >> to) & 1u;
  }
  // Bitmask of the heads of arrows leaving v / tails of arrows entering v.
  std::uint64_t out_mask(int v) const { return out_[v]; }
  std::uint64_t in_mask(int v) const { return in_[v]; }
  std::uint64_t neighbor_mask(int v) const { return out_[v] | in_[v]; }

  int out_degree(int v) const;
  int in_degree(int v) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.n_ == b.n_ && a.arrows_ == b.arrows_;
  }

 private:
  int n_;
  std::vector<Arrow> arrows_;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

// Isomorphism-class key: n and the sorted arrow list of the lexicographically
// smallest relabeling, each as a big-endian uint16.
class CanonicalQuiver {
 public:
  CanonicalQuiver(int n, std::string encoding)
      : n_(n), encoding_(std::move(encoding)) {}

  int size() const { return n_; }
  const std::string& encoding() const { return encoding_; }

  // The minimal relabeling itself.
  Quiver to_quiver() const;

  friend bool operator==(const CanonicalQuiver& a, const CanonicalQuiver& b) {
    return a.encoding_ == b.encoding_;
  }
  friend auto operator<=>(const CanonicalQuiver& a, const CanonicalQuiver& b) {
    return a.encoding_ <=> b.encoding_;
  }

 private:
  int n_;
  std::string encoding_;
};

struct CanonicalQuiverHash {
  std::size_t operator()(const CanonicalQuiver& c) const {
    return std::hash<std::string>{}(c.encoding());
  }
};

// Path 0 -> 1 -> ... -> n-1.
Quiver linear_quiver(int n);

// Mutation at k. The mutated vertex keeps its label. Throws
// std::out_of_range for a bad k and std::domain_error if composing through k
// would create a parallel arrow (outside the class closed under mutation).
Quiver mutate(const Quiver& q, int k);

bool is_mutation_involutive(const Quiver& q, int k);

// Connected, every cycle of the underlying graph is an oriented triangle,
// and no two triangles share an arrow.
bool validate_type_a(const Quiver& q);

// Removes v and compacts labels above it. Requires n >= 2.
Quiver delete_vertex(const Quiver& q, int v);

bool is_connected(const Quiver& q);

// True iff v lies on an oriented 3-cycle.
bool on_oriented_triangle(const Quiver& q, int v);

CanonicalQuiver canonical_form(const Quiver& q);

bool are_isomorphic(const Quiver& a, const Quiver& b);

// Relabels vertex v to perm[v]. perm must be a permutation of 0..n-1.
Quiver relabel(const Quiver& q, std::span<const int> perm);

// One "i -> j;" line per arrow, in arrow order.
std::string to_dot(const Quiver& q, const std::string& graph_name = "Q");

}  // namespace mutanta

#endif  // MUTANTA_QUIVER_H_
