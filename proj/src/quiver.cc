#include "mutanta/quiver.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace mutanta {

namespace {

std::vector<Arrow> arrows_from_masks(const std::vector<std::uint64_t>& out) {
  std::vector<Arrow> arrows;
  for (int i = 0; i < static_cast<int>(out.size()); ++i) {
    for (std::uint64_t m = out[i]; m != 0; m &= m - 1) {
      arrows.push_back({i, std::countr_zero(m)});
    }
  }
  return arrows;
}

// Biconnected components of the underlying undirected graph, each reported
// as the list of its (undirected) edges.
class BlockFinder {
 public:
  explicit BlockFinder(const Quiver& q)
      : q_(q), disc_(q.size(), -1), low_(q.size(), 0) {}

  std::vector<std::vector<std::pair<int, int>>> run() {
    for (int v = 0; v < q_.size(); ++v) {
      if (disc_[v] < 0) visit(v, -1);
    }
    return std::move(blocks_);
  }

 private:
  void visit(int u, int parent) {
    disc_[u] = low_[u] = timer_++;
    for (std::uint64_t m = q_.neighbor_mask(u); m != 0; m &= m - 1) {
      const int w = std::countr_zero(m);
      if (w == parent) continue;
      if (disc_[w] < 0) {
        stack_.push_back({u, w});
        visit(w, u);
        low_[u] = std::min(low_[u], low_[w]);
        if (low_[w] >= disc_[u]) {
          std::vector<std::pair<int, int>> block;
          while (true) {
            auto e = stack_.back();
            stack_.pop_back();
            block.push_back(e);
            if (e.first == u && e.second == w) break;
          }
          blocks_.push_back(std::move(block));
        }
      } else if (disc_[w] < disc_[u]) {
        stack_.push_back({u, w});
        low_[u] = std::min(low_[u], disc_[w]);
      }
    }
  }

  const Quiver& q_;
  std::vector<int> disc_;
  std::vector<int> low_;
  int timer_ = 0;
  std::vector<std::pair<int, int>> stack_;
  std::vector<std::vector<std::pair<int, int>>> blocks_;
};

}  // namespace

Quiver::Quiver(int n, std::vector<Arrow> arrows)
    : n_(n), arrows_(std::move(arrows)) {
  if (n < 1 || n > kMaxQuiverVertices) {
    throw std::invalid_argument("quiver size must be in [1, 64], got " +
                                std::to_string(n));
  }
  out_.assign(n, 0);
  in_.assign(n, 0);
  for (const Arrow& a : arrows_) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) {
      throw std::invalid_argument("arrow endpoint out of range");
    }
    if (a.from == a.to) throw std::invalid_argument("loop at vertex " +
                                                    std::to_string(a.from));
    const std::uint64_t bit = std::uint64_t{1} << a.to;
    if (out_[a.from] & bit) throw std::invalid_argument("parallel arrows");
    if ((out_[a.to] >> a.from) & 1u) {
      throw std::invalid_argument("2-cycle between " + std::to_string(a.from) +
                                  " and " + std::to_string(a.to));
    }
    out_[a.from] |= bit;
    in_[a.to] |= std::uint64_t{1} << a.from;
  }
  std::sort(arrows_.begin(), arrows_.end());
}

int Quiver::out_degree(int v) const { return std::popcount(out_[v]); }
int Quiver::in_degree(int v) const { return std::popcount(in_[v]); }

Quiver linear_quiver(int n) {
  if (n < 1) throw std::invalid_argument("linear quiver needs n >= 1");
  std::vector<Arrow> arrows;
  for (int i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
  return Quiver(n, std::move(arrows));
}

Quiver mutate(const Quiver& q, int k) {
  const int n = q.size();
  if (k < 0 || k >= n) {
    throw std::out_of_range("mutation vertex " + std::to_string(k) +
                            " out of range");
  }
  std::vector<std::uint64_t> out(n);
  for (int i = 0; i < n; ++i) out[i] = q.out_mask(i);

  for (std::uint64_t pm = q.in_mask(k); pm != 0; pm &= pm - 1) {
    const int i = std::countr_zero(pm);
    for (std::uint64_t sm = q.out_mask(k); sm != 0; sm &= sm - 1) {
      const int j = std::countr_zero(sm);
      const std::uint64_t ibit = std::uint64_t{1} << i;
      const std::uint64_t jbit = std::uint64_t{1} << j;
      if (out[j] & ibit) {
        out[j] &= ~ibit;
      } else if (out[i] & jbit) {
        throw std::domain_error("mutation at " + std::to_string(k) +
                                " would create parallel arrows " +
                                std::to_string(i) + " -> " + std::to_string(j));
      } else {
        out[i] |= jbit;
      }
    }
  }

  const std::uint64_t kbit = std::uint64_t{1} << k;
  const std::uint64_t preds = q.in_mask(k);
  const std::uint64_t succs = q.out_mask(k);
  for (std::uint64_t m = preds; m != 0; m &= m - 1) {
    out[std::countr_zero(m)] &= ~kbit;
  }
  for (std::uint64_t m = succs; m != 0; m &= m - 1) {
    out[std::countr_zero(m)] |= kbit;
  }
  out[k] = preds;

  return Quiver(n, arrows_from_masks(out));
}

bool is_mutation_involutive(const Quiver& q, int k) {
  return mutate(mutate(q, k), k) == q;
}

bool is_connected(const Quiver& q) {
  std::uint64_t seen = 1, frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m != 0; m &= m - 1) {
      next |= q.neighbor_mask(std::countr_zero(m));
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == q.size();
}

bool on_oriented_triangle(const Quiver& q, int v) {
  for (std::uint64_t m = q.out_mask(v); m != 0; m &= m - 1) {
    if (q.out_mask(std::countr_zero(m)) & q.in_mask(v)) return true;
  }
  return false;
}

bool validate_type_a(const Quiver& q) {
  if (!is_connected(q)) return false;
  for (const auto& block : BlockFinder(q).run()) {
    if (block.size() == 1) continue;
    if (block.size() != 3) return false;
    std::uint64_t verts = 0;
    for (auto [u, w] : block) verts |= (std::uint64_t{1} << u) | (std::uint64_t{1} << w);
    if (std::popcount(verts) != 3) return false;
    for (std::uint64_t m = verts; m != 0; m &= m - 1) {
      if (std::popcount(q.out_mask(std::countr_zero(m)) & verts) != 1) {
        return false;
      }
    }
  }
  return true;
}

Quiver delete_vertex(const Quiver& q, int v) {
  if (v < 0 || v >= q.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  if (q.size() < 2) {
    throw std::invalid_argument("cannot delete the only vertex of a quiver");
  }
  auto shift = [v](int x) { return x > v ? x - 1 : x; };
  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows()) {
    if (a.from == v || a.to == v) continue;
    arrows.push_back({shift(a.from), shift(a.to)});
  }
  return Quiver(q.size() - 1, std::move(arrows));
}

Quiver relabel(const Quiver& q, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != q.size()) {
    throw std::invalid_argument("permutation size mismatch");
  }
  std::vector<Arrow> arrows;
  arrows.reserve(q.arrows().size());
  for (const Arrow& a : q.arrows()) arrows.push_back({perm[a.from], perm[a.to]});
  return Quiver(q.size(), std::move(arrows));
}

std::string to_dot(const Quiver& q, const std::string& graph_name) {
  std::string out = "digraph " + graph_name + " {\n";
  for (int v = 0; v < q.size(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const Arrow& a : q.arrows()) {
    out += "  " + std::to_string(a.from) + " -> " + std::to_string(a.to) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace mutanta
