#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// deliberately avoid the library's own face walk and parity union-find.

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "spanlift/spanlift.hpp"

namespace spanlift::testing {

inline constexpr const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
inline constexpr const char* kHopf = "X(1,3,2,4) X(3,1,4,2)";
inline constexpr const char* kWhitehead = "X(6,1,7,2) X(10,7,5,8) X(4,5,1,6) X(2,10,3,9) X(8,4,9,3)";

inline HalfInt H(const char* text) { return *HalfInt::parse(text); }

inline const std::vector<CensusEntry>& census() {
  static const std::vector<CensusEntry> entries = load_census("builtin:table1");
  return entries;
}

inline const CensusEntry& census_entry(const std::string& name) {
  for (const auto& e : census())
    if (e.name == name) return e;
  throw std::out_of_range("no census entry " + name);
}

inline Diagram census_diagram(const std::string& name) { return parse_pd(census_entry(name).pd); }

inline std::vector<Diagram> census_diagrams() {
  std::vector<Diagram> out;
  for (const auto& e : census()) out.push_back(parse_pd(e.pd));
  return out;
}

// Reduced alternating diagrams with crossing counts spread over [lo, hi].
inline std::vector<Diagram> random_corpus(unsigned seed, int count, int lo, int hi) {
  std::mt19937_64 rng(seed);
  std::vector<Diagram> out;
  for (int i = 0; i < count; ++i) out.push_back(random_reduced_alternating(rng, lo + i % (hi - lo + 1)));
  return out;
}

// Face gons from gluing crossing corners across edges. The corner after
// position p (between p and p+1) sits left of the edge leaving through p,
// which is the corner before the partner slot on the far crossing.
inline std::multiset<int> corner_gluing_gons(const Diagram& d) {
  if (d.empty()) return {0, 0};
  const int slots = d.slot_count();
  UnionFind uf(slots);  // corner k of crossing x is indexed by slot_of(x, k)
  auto corner_after = [](int s) { return s; };
  auto corner_before = [](int s) { return slot_of(crossing_of(s), (pos_of(s) + 3) % 4); };
  for (int s = 0; s < slots; ++s) uf.unite(corner_after(s), corner_before(d.partner(s)));
  std::map<int, int> size;
  for (int c = 0; c < slots; ++c) ++size[uf.find(c)];
  std::multiset<int> out;
  for (auto [root, n] : size) out.insert(n);
  return out;
}

inline std::multiset<int> gon_multiset(const Diagram& d) {
  std::multiset<int> out;
  for (const auto& f : faces(d)) out.insert(f.gon);
  return out;
}

struct CircleLabels {
  int circles = 0;
  std::vector<int> of_slot;
  std::vector<bool> arrives;  // traversal reaches the crossing through this slot
};

// State circles by walking arcs and turning at each smoothing.
inline CircleLabels walk_circles(const Diagram& d, const State& s) {
  CircleLabels out;
  const int slots = d.slot_count();
  out.of_slot.assign(slots, -1);
  out.arrives.assign(slots, false);
  for (int start = 0; start < slots; ++start) {
    if (out.of_slot[start] != -1) continue;
    int leave = start;
    while (out.of_slot[leave] == -1) {
      const int arrive = d.partner(leave);
      out.of_slot[leave] = out.of_slot[arrive] = out.circles;
      out.arrives[arrive] = true;
      const int x = crossing_of(arrive);
      const int p = pos_of(arrive);
      const int q = s[x] == Split::A ? (p ^ 1) : (3 - p);
      leave = slot_of(x, q);
    }
    ++out.circles;
  }
  return out;
}

// No band returns to the circle it leaves.
inline bool basic_by_walk(const Diagram& d, const State& s) {
  const CircleLabels c = walk_circles(d, s);
  for (int x = 0; x < d.crossing_count(); ++x)
    if (c.of_slot[slot_of(x, 0)] == c.of_slot[slot_of(x, 2)]) return false;
  return true;
}

// Orientability by trying every direction of every state circle: the surface
// is orientable iff some choice makes the boundary arcs glue into oriented
// strands through each crossing (one end in, one end out, per strand).
inline bool orientable_by_directions(const Diagram& d, const State& s) {
  if (d.empty()) return true;
  const CircleLabels c = walk_circles(d, s);
  if (c.circles > 20) throw std::logic_error("too many circles for the direction oracle");
  for (std::uint32_t mask = 0; mask < (1u << c.circles); ++mask) {
    auto in = [&](int slot) { return c.arrives[slot] != static_cast<bool>((mask >> c.of_slot[slot]) & 1u); };
    bool ok = true;
    for (int x = 0; ok && x < d.crossing_count(); ++x)
      ok = in(slot_of(x, 0)) != in(slot_of(x, 2)) && in(slot_of(x, 1)) != in(slot_of(x, 3));
    if (ok) return true;
  }
  return false;
}

inline std::vector<State> all_states(int n) {
  std::vector<State> out;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r) out.push_back(State::from_rank(n, r));
  return out;
}

}  // namespace spanlift::testing
