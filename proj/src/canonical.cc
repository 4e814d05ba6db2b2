// Canonical labeling by colour refinement plus individualization.
//
// Every leaf of the search tree is a discrete colouring; the canonical form
// is the lexicographically smallest sorted arrow list over all leaves. The
// tree only depends on colours, never on input labels, so the minimum is a
// relabeling invariant.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mutanta/quiver.h"

namespace mutanta {

namespace {

using Colouring = std::vector<int>;

// Dense ranks of a vertex signature; returns the number of classes.
int rank_signatures(std::vector<std::vector<int>>& sigs, Colouring& colours) {
  const int n = static_cast<int>(sigs.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return sigs[a] < sigs[b]; });
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && sigs[order[i]] != sigs[order[i - 1]]) ++rank;
    colours[order[i]] = rank;
  }
  return n == 0 ? 0 : rank + 1;
}

// Equitable refinement: split classes by the multisets of successor and
// predecessor colours until stable.
int refine(const Quiver& q, Colouring& colours) {
  const int n = q.size();
  std::vector<std::vector<int>> sigs(n);
  int classes = -1;
  while (true) {
    for (int v = 0; v < n; ++v) {
      auto& s = sigs[v];
      s.clear();
      s.push_back(colours[v]);
      const std::size_t out_begin = s.size();
      for (std::uint64_t m = q.out_mask(v); m != 0; m &= m - 1) {
        s.push_back(colours[std::countr_zero(m)]);
      }
      std::sort(s.begin() + out_begin, s.end());
      s.push_back(-1);
      const std::size_t in_begin = s.size();
      for (std::uint64_t m = q.in_mask(v); m != 0; m &= m - 1) {
        s.push_back(colours[std::countr_zero(m)]);
      }
      std::sort(s.begin() + in_begin, s.end());
    }
    const int next = rank_signatures(sigs, colours);
    if (next == classes) return next;
    classes = next;
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Quiver& q) : q_(q) {}

  std::vector<int> run() {
    Colouring colours(q_.size(), 0);
    descend(std::move(colours));
    return std::move(*best_);
  }

 private:
  void descend(Colouring colours) {
    const int n = q_.size();
    if (refine(q_, colours) == n) {
      consider_leaf(colours);
      return;
    }
    std::vector<int> cell_size(n, 0);
    for (int c : colours) ++cell_size[c];
    const int target = static_cast<int>(
        std::find_if(cell_size.begin(), cell_size.end(),
                     [](int s) { return s > 1; }) -
        cell_size.begin());
    for (int v = 0; v < n; ++v) {
      if (colours[v] != target) continue;
      Colouring child(n);
      for (int u = 0; u < n; ++u) {
        child[u] = 2 * colours[u] + (colours[u] == target && u != v ? 1 : 0);
      }
      descend(std::move(child));
    }
  }

  void consider_leaf(const Colouring& perm) {
    std::vector<std::pair<int, int>> arrows;
    arrows.reserve(q_.arrows().size());
    for (const Arrow& a : q_.arrows()) arrows.push_back({perm[a.from], perm[a.to]});
    std::sort(arrows.begin(), arrows.end());
    std::vector<int> flat;
    flat.reserve(2 * arrows.size());
    for (auto [f, t] : arrows) {
      flat.push_back(f);
      flat.push_back(t);
    }
    if (!best_ || flat < *best_) best_ = std::move(flat);
  }

  const Quiver& q_;
  std::optional<std::vector<int>> best_;
};

void put_u16(std::string& out, int value) {
  out.push_back(static_cast<char>((value >> 8) & 0xff));
  out.push_back(static_cast<char>(value & 0xff));
}

int get_u16(const std::string& in, std::size_t pos) {
  return (static_cast<unsigned char>(in[pos]) << 8) |
         static_cast<unsigned char>(in[pos + 1]);
}

}  // namespace

CanonicalQuiver canonical_form(const Quiver& q) {
  const std::vector<int> flat = CanonicalSearch(q).run();
  std::string encoding;
  encoding.reserve(2 + 2 * flat.size());
  put_u16(encoding, q.size());
  for (int x : flat) put_u16(encoding, x);
  return CanonicalQuiver(q.size(), std::move(encoding));
}

bool are_isomorphic(const Quiver& a, const Quiver& b) {
  if (a.size() != b.size() || a.arrows().size() != b.arrows().size()) {
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

Quiver CanonicalQuiver::to_quiver() const {
  if (encoding_.size() < 2 || encoding_.size() % 4 != 2) {
    throw std::invalid_argument("malformed canonical encoding");
  }
  std::vector<Arrow> arrows;
  for (std::size_t pos = 2; pos < encoding_.size(); pos += 4) {
    arrows.push_back({get_u16(encoding_, pos), get_u16(encoding_, pos + 2)});
  }
  return Quiver(get_u16(encoding_, 0), std::move(arrows));
}

}  // namespace mutanta
