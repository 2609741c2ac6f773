#pragma once

// Layered (state) surfaces: split every crossing A or B, fill the resulting
// circles with disks and reattach a half-twisted band per crossing. Disk
// heights are not modeled; they do not affect the invariants computed here.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spanlift/diagram.hpp"
#include "spanlift/error.hpp"
#include "spanlift/half_int.hpp"
#include "spanlift/union_find.hpp"

namespace spanlift {

enum class Split : std::uint8_t { A, B };

inline Split flip(Split s) { return s == Split::A ? Split::B : Split::A; }

// Position joined to `pos` by the smoothing. A joins (0,1),(2,3); B joins
// (0,3),(1,2), where position 0 is the incoming under-end.
inline constexpr int smoothing_partner(int pos, Split s) {
  if (s == Split::A) return pos ^ 1;
  return 3 - pos;
}

// Smoothing that closes the corner between adjacent positions p and p+1.
inline constexpr Split closing_split(int p, int q) {
  const int lo = (p + 1) % 4 == q ? p : q;
  return (lo % 2 == 0) ? Split::A : Split::B;
}

class State {
 public:
  State() = default;
  explicit State(std::vector<Split> splits) : splits_(std::move(splits)) {}

  static State uniform(int n, Split s) { return State(std::vector<Split>(n, s)); }

  // Lexicographic rank with crossing 0 most significant, A < B.
  static State from_rank(int n, std::uint64_t rank) {
    std::vector<Split> v(n);
    for (int i = 0; i < n; ++i) v[i] = ((rank >> (n - 1 - i)) & 1u) ? Split::B : Split::A;
    return State(std::move(v));
  }

  static State parse(std::string_view text) {
    std::vector<Split> v;
    for (char c : text) {
      if (c == 'A' || c == 'a')
        v.push_back(Split::A);
      else if (c == 'B' || c == 'b')
        v.push_back(Split::B);
      else
        throw Error(ErrorKind::SplitDomainMismatch, std::string("state letters must be A or B, got '") + c + "'");
    }
    return State(std::move(v));
  }

  int size() const { return static_cast<int>(splits_.size()); }
  Split operator[](int i) const { return splits_[i]; }
  Split& operator[](int i) { return splits_[i]; }
  const std::vector<Split>& splits() const { return splits_; }

  int a_count() const {
    int a = 0;
    for (Split s : splits_) a += s == Split::A;
    return a;
  }
  int b_count() const { return size() - a_count(); }

  State swapped() const {
    State s = *this;
    for (auto& x : s.splits_) x = flip(x);
    return s;
  }

  std::string str() const {
    std::string out;
    for (Split s : splits_) out.push_back(s == Split::A ? 'A' : 'B');
    return out;
  }

  auto operator<=>(const State&) const = default;

 private:
  std::vector<Split> splits_;
};

struct Band {
  int crossing = 0;
  int u = 0, v = 0;  // circles joined
  Split split = Split::A;
  // Required xor of the two circles' direction flips for the band to be
  // orienting, relative to each circle's default traversal.
  int parity = 0;
};

struct StateGraph {
  int circles = 0;
  std::vector<Band> bands;
  std::vector<int> circle_of_slot;
  // Whether the circle's default traversal arrives at the slot from its arc.
  std::vector<bool> arrives_at;
};

struct StateSurface {
  int crossings = 0;
  int f = 0;
  int euler = 0;
  int a_count = 0;
  int b_count = 0;
  int twist = 0;
  int slope = 0;
  bool orientable = true;
  bool basic = true;
  bool connected = true;
  int boundary_components = 1;

  bool operator==(const StateSurface&) const = default;
};

struct GenusValue {
  HalfInt value;
  bool orientable = true;

  bool operator==(const GenusValue&) const = default;
};

inline void check_domain(const Diagram& d, const State& s) {
  if (s.size() != d.crossing_count())
    throw Error(ErrorKind::SplitDomainMismatch, "state has " + std::to_string(s.size()) + " splits for " +
                                                    std::to_string(d.crossing_count()) + " crossings");
}

inline StateGraph state_graph(const Diagram& d, const State& s) {
  check_domain(d, s);
  StateGraph g;
  if (d.empty()) {
    g.circles = 1;
    return g;
  }
  const int slots = d.slot_count();
  UnionFind uf(slots);
  for (int t = 0; t < slots; ++t) {
    uf.unite(t, d.partner(t));
    uf.unite(t, slot_of(crossing_of(t), smoothing_partner(pos_of(t), s[crossing_of(t)])));
  }
  g.circle_of_slot.assign(slots, -1);
  g.arrives_at.assign(slots, false);
  // Circles numbered by lowest slot; traversal leaves through that slot first.
  for (int start = 0; start < slots; ++start) {
    if (g.circle_of_slot[start] != -1) continue;
    const int id = g.circles++;
    int leave = start;
    do {
      const int arrive = d.partner(leave);
      g.circle_of_slot[leave] = g.circle_of_slot[arrive] = id;
      g.arrives_at[arrive] = true;
      leave = slot_of(crossing_of(arrive), smoothing_partner(pos_of(arrive), s[crossing_of(arrive)]));
    } while (leave != start);
  }
  for (int x = 0; x < d.crossing_count(); ++x) {
    const int s0 = slot_of(x, 0), s2 = slot_of(x, 2);
    Band b;
    b.crossing = x;
    b.split = s[x];
    b.u = g.circle_of_slot[s0];
    b.v = g.circle_of_slot[s2];
    // The under-strand through the band must enter at one end and leave at
    // the other.
    b.parity = 1 ^ static_cast<int>(g.arrives_at[s0]) ^ static_cast<int>(g.arrives_at[s2]);
    g.bands.push_back(b);
  }
  return g;
}

// Signed-graph balance of the band parities.
inline bool is_orientable(const StateGraph& g) {
  ParityUnionFind puf(g.circles);
  for (const auto& b : g.bands)
    if (!puf.relate(b.u, b.v, b.parity)) return false;
  return true;
}

inline bool is_basic(const StateGraph& g) {
  for (const auto& b : g.bands)
    if (b.u == b.v) return false;
  return true;
}

inline bool is_graph_connected(const StateGraph& g) {
  UnionFind uf(g.circles);
  for (const auto& b : g.bands) uf.unite(b.u, b.v);
  return uf.set_count() == 1;
}

inline int twist_of(const State& s) { return s.a_count() - s.b_count(); }

inline int slope_of(const Diagram& d, const State& s) {
  check_domain(d, s);
  return twist_of(s) + self_writhe(d);
}

inline StateSurface resolve(const Diagram& d, const State& s) {
  const StateGraph g = state_graph(d, s);
  StateSurface out;
  out.crossings = d.crossing_count();
  out.f = g.circles;
  out.euler = out.f - out.crossings;
  out.a_count = s.a_count();
  out.b_count = s.b_count();
  out.twist = out.a_count - out.b_count;
  out.slope = out.twist + self_writhe(d);
  out.orientable = is_orientable(g);
  out.basic = is_basic(g);
  out.connected = is_graph_connected(g);
  out.boundary_components = d.component_count();
  return out;
}

inline bool is_orientable(const Diagram& d, const State& s) { return is_orientable(state_graph(d, s)); }
inline bool is_basic(const Diagram& d, const State& s) { return is_basic(state_graph(d, s)); }

// Orientable: integer genus (2 - chi - b)/2. Nonorientable: half the crosscap
// number 2 - chi - b.
inline GenusValue genus_from(int euler, int boundary, bool orientable) {
  const std::int64_t twice = 2 - euler - boundary;
  if (orientable && twice % 2 != 0)
    throw Error(ErrorKind::NonIntegerGenus, "orientable surface with odd 2-chi-b = " + std::to_string(twice));
  return {HalfInt::from_twice(twice), orientable};
}

inline GenusValue genus_of(const StateSurface& surf) {
  if (!surf.connected) throw Error(ErrorKind::Disconnected, "genus of a disconnected state surface");
  return genus_from(surf.euler, surf.boundary_components, surf.orientable);
}

// The state splitting each crossing coherently with the current orientation.
inline State seifert_state(const Diagram& d) {
  std::vector<Split> v(d.crossing_count());
  for (int x = 0; x < d.crossing_count(); ++x) {
    const int u = d.enters_at(slot_of(x, 0)) ? 0 : 2;
    const int o = d.enters_at(slot_of(x, 1)) ? 1 : 3;
    // Incoming under-end joins the outgoing over-end.
    const int out_over = (o + 2) % 4;
    v[x] = smoothing_partner(u, Split::A) == out_over ? Split::A : Split::B;
  }
  return State(std::move(v));
}

// ---------------------------------------------------------------------------
// Enumeration

enum class StateFilter { All, Basic, Orientable, Nonorientable };

inline constexpr int kDefaultExhaustiveBound = 20;

// SPANLIFT_EXHAUSTIVE_BOUND overrides the default crossing cap.
inline int exhaustive_bound_from_env() {
  if (const char* v = std::getenv("SPANLIFT_EXHAUSTIVE_BOUND")) {
    char* end = nullptr;
    long b = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && b >= 0 && b <= 62) return static_cast<int>(b);
  }
  return kDefaultExhaustiveBound;
}

inline bool passes(const StateSurface& s, StateFilter f) {
  switch (f) {
    case StateFilter::All: return true;
    case StateFilter::Basic: return s.basic;
    case StateFilter::Orientable: return s.orientable;
    case StateFilter::Nonorientable: return !s.orientable;
  }
  return false;
}

inline void check_bound(const Diagram& d, int bound) {
  if (d.crossing_count() > bound)
    throw Error(ErrorKind::BoundExceeded, std::to_string(d.crossing_count()) + " crossings exceeds the exhaustive bound " +
                                              std::to_string(bound));
}

// Visits every state passing the filter in lexicographic order.
inline void for_each_state(const Diagram& d, StateFilter filter,
                           const std::function<void(const State&, const StateSurface&)>& visit,
                           int bound = exhaustive_bound_from_env()) {
  check_bound(d, bound);
  const int n = d.crossing_count();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t r = 0; r < total; ++r) {
    State s = State::from_rank(n, r);
    StateSurface surf = resolve(d, s);
    if (passes(surf, filter)) visit(s, surf);
  }
}

inline std::vector<std::pair<State, StateSurface>> enumerate_states(const Diagram& d, StateFilter filter,
                                                                    int bound = exhaustive_bound_from_env()) {
  std::vector<std::pair<State, StateSurface>> out;
  for_each_state(
      d, filter, [&](const State& s, const StateSurface& surf) { out.emplace_back(s, surf); }, bound);
  return out;
}

}  // namespace spanlift
