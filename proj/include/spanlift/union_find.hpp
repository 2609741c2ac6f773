#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace spanlift {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];  // path halving
      x = parent_[x];
    }
    return x;
  }

  // Returns true if a merge happened.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    return true;
  }

  bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }
  std::size_t set_count() const { return sets_; }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t sets_;
};

// Union-find over Z/2 labels: each element carries its parity relative to
// the class root. A constraint x_a + x_b = p (mod 2) that contradicts the
// existing ones marks the structure inconsistent (the signed graph is
// unbalanced).
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  // Root of x, and parity of x relative to it.
  std::pair<std::size_t, int> find(std::size_t x) {
    int p = 0;
    std::size_t r = x;
    while (parent_[r] != r) {
      p ^= parity_[r];
      r = parent_[r];
    }
    // compress
    int acc = p;
    while (parent_[x] != x) {
      std::size_t next = parent_[x];
      int step = parity_[x];
      parent_[x] = r;
      parity_[x] = acc;
      acc ^= step;
      x = next;
    }
    return {r, p};
  }

  // Adds x_a xor x_b == parity. Returns false if it contradicts.
  bool relate(std::size_t a, std::size_t b, int parity) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if ((pa ^ pb) != parity) consistent_ = false;
      return (pa ^ pb) == parity;
    }
    if (rank_[ra] < rank_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ parity;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return true;
  }

  bool consistent() const { return consistent_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
  std::vector<int> rank_;
  bool consistent_ = true;
};

}  // namespace spanlift
