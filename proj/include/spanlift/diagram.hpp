#pragma once

// Link diagrams as planar combinatorial maps.
//
// A crossing is stored as the four arcs met counterclockwise around it,
// starting at the incoming end of the under-strand, so the under-strand
// runs slot 0 -> slot 2 and the over-strand occupies slots 1 and 3.
// Arc-end positions are addressed by a flat slot index 4*crossing + k.

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spanlift/error.hpp"
#include "spanlift/half_int.hpp"
#include "spanlift/union_find.hpp"

namespace spanlift {

using ArcId = int;

struct Crossing {
  std::array<ArcId, 4> ends{};

  auto operator<=>(const Crossing&) const = default;
};

inline constexpr int slot_of(int crossing, int pos) { return 4 * crossing + pos; }
inline constexpr int crossing_of(int slot) { return slot / 4; }
inline constexpr int pos_of(int slot) { return slot % 4; }
inline constexpr int opposite(int slot) { return slot_of(crossing_of(slot), (pos_of(slot) + 2) % 4); }
inline constexpr int rotate_slot(int slot, int by) { return slot_of(crossing_of(slot), (pos_of(slot) + by) % 4); }
inline constexpr bool is_under_slot(int slot) { return pos_of(slot) % 2 == 0; }

class Diagram {
 public:
  // The 0-crossing unknot.
  Diagram() = default;

  // Validates incidence and planarity. Tuples whose under-strand runs against
  // the chosen component direction are rotated by two positions, which
  // describes the same crossing.
  explicit Diagram(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
    if (crossings_.empty()) return;
    build_incidence();
    choose_natural_directions();
    check_planar();
  }

  static Diagram unknot() { return Diagram{}; }

  bool empty() const { return crossings_.empty(); }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int slot_count() const { return 4 * crossing_count(); }
  const std::vector<Crossing>& crossings() const { return crossings_; }

  int component_count() const { return empty() ? 1 : static_cast<int>(entries_.size()); }

  // Other end of the arc leaving `slot`.
  int partner(int slot) const { return partner_[slot]; }
  ArcId arc_at(int slot) const { return crossings_[crossing_of(slot)].ends[pos_of(slot)]; }
  int component_of_slot(int slot) const { return component_of_slot_[slot]; }

  // Entry slots of each component in its natural traversal order, starting
  // with the passage entered through the component's least arc.
  const std::vector<std::vector<int>>& natural_entries() const { return entries_; }

  const std::vector<bool>& reversed() const { return reversed_; }

  Diagram with_orientation(std::vector<bool> reversed) const {
    if (!empty() && reversed.size() != entries_.size())
      throw std::invalid_argument("orientation vector does not match component count");
    Diagram d = *this;
    if (!empty()) d.reversed_ = std::move(reversed);
    return d;
  }

  // Whether the oriented strand enters its crossing at `slot`.
  bool enters_at(int slot) const {
    return natural_entry_[slot] != static_cast<bool>(reversed_[component_of_slot_[slot]]);
  }

  // Entry slots in the oriented traversal order.
  std::vector<int> oriented_entries(int component) const {
    const auto& nat = entries_[component];
    if (!reversed_[component]) return nat;
    // Reversed: each passage is entered through its natural exit, in reverse.
    std::vector<int> out;
    out.reserve(nat.size());
    for (auto it = nat.rbegin(); it != nat.rend(); ++it) out.push_back(opposite(*it));
    return out;
  }

  std::string to_pd() const {
    if (empty()) return "U";
    std::ostringstream os;
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
      const auto& e = crossings_[i].ends;
      if (i) os << ' ';
      os << "X(" << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3] << ')';
    }
    return os.str();
  }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.crossings_ == b.crossings_ && a.reversed_ == b.reversed_;
  }

 private:
  void build_incidence() {
    const int slots = slot_count();
    std::map<ArcId, std::vector<int>> uses;
    for (int s = 0; s < slots; ++s) {
      ArcId a = arc_at(s);
      if (a <= 0) throw Error(ErrorKind::MalformedTuple, "arc labels must be positive, got " + std::to_string(a));
      uses[a].push_back(s);
    }
    partner_.assign(slots, -1);
    for (const auto& [arc, where] : uses) {
      if (where.size() != 2)
        throw Error(ErrorKind::DanglingArc,
                    "arc " + std::to_string(arc) + " used " + std::to_string(where.size()) + " time(s)");
      partner_[where[0]] = where[1];
      partner_[where[1]] = where[0];
    }
  }

  // Walks the strand through `first_entry` and returns its entry slots.
  std::vector<int> walk(int first_entry) const {
    std::vector<int> out;
    int s = first_entry;
    do {
      out.push_back(s);
      s = partner_[opposite(s)];
    } while (s != first_entry);
    return out;
  }

  void choose_natural_directions() {
    const int slots = slot_count();
    std::vector<int> seen(slots, 0);
    // Components ordered by least arc.
    std::vector<int> order(slots);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return arc_at(x) < arc_at(y); });

    std::vector<std::vector<int>> comps;
    for (int s : order) {
      if (seen[s]) continue;
      // Two candidate directions through the least arc: arrive at s or at its partner.
      std::vector<int> fwd = walk(s);
      std::vector<int> bwd = walk(partner_[s]);
      for (int e : fwd) seen[e] = seen[opposite(e)] = 1;
      auto score = [](const std::vector<int>& w) {
        int n = 0;
        for (int e : w) n += pos_of(e) == 0;
        return n;
      };
      int sf = score(fwd), sb = score(bwd);
      bool take_fwd;
      if (sf != sb) {
        take_fwd = sf > sb;
      } else {
        // No under-passage preference: follow increasing arc labels.
        take_fwd = arc_at(opposite(fwd.front())) <= arc_at(opposite(bwd.front()));
      }
      comps.push_back(take_fwd ? std::move(fwd) : std::move(bwd));
    }

    // Rotate tuples so that every natural under-passage enters at position 0.
    bool rotated = false;
    for (const auto& c : comps)
      for (int e : c)
        if (pos_of(e) == 2) {
          auto& ends = crossings_[crossing_of(e)].ends;
          std::rotate(ends.begin(), ends.begin() + 2, ends.end());
          rotated = true;
        }
    if (rotated) {
      std::vector<int> shift(crossing_count(), 0);
      for (const auto& c : comps)
        for (int e : c)
          if (pos_of(e) == 2) shift[crossing_of(e)] = 2;
      build_incidence();
      for (auto& c : comps) c = walk(rotate_slot(c.front(), shift[crossing_of(c.front())]));
    }

    entries_ = std::move(comps);
    reversed_.assign(entries_.size(), false);
    component_of_slot_.assign(slots, -1);
    natural_entry_.assign(slots, false);
    for (int c = 0; c < static_cast<int>(entries_.size()); ++c)
      for (int e : entries_[c]) {
        component_of_slot_[e] = component_of_slot_[opposite(e)] = c;
        natural_entry_[e] = true;
      }
  }

  void check_planar() const;

  std::vector<Crossing> crossings_;
  std::vector<int> partner_;
  std::vector<std::vector<int>> entries_;
  std::vector<bool> reversed_;
  std::vector<int> component_of_slot_;
  std::vector<bool> natural_entry_;
};

// ---------------------------------------------------------------------------
// Faces

struct FaceSide {
  ArcId arc = 0;
  int from_slot = 0;  // slot the boundary walk leaves through
  int to_slot = 0;    // slot it arrives at
};

struct Face {
  std::vector<FaceSide> boundary;
  int gon = 0;  // crossing corners on the boundary
};

struct FaceMap {
  std::vector<Face> faces;
  // corner_face[t] is the face holding the corner between positions t-1 and t
  // of t's crossing (the corner turned at when arriving through t).
  std::vector<int> corner_face;
};

// Boundary walk keeping the face on the left: arrive through t, leave through
// the clockwise-next position t-1.
inline int next_leave_slot(int arrive) { return rotate_slot(arrive, 3); }

inline FaceMap face_map(const Diagram& d) {
  FaceMap fm;
  if (d.empty()) {
    fm.faces.resize(2);
    return fm;
  }
  const int slots = d.slot_count();
  fm.corner_face.assign(slots, -1);
  std::vector<char> used(slots, 0);  // directed side leaving through slot
  for (int start = 0; start < slots; ++start) {
    if (used[start]) continue;
    Face f;
    int leave = start;
    const int id = static_cast<int>(fm.faces.size());
    while (!used[leave]) {
      used[leave] = 1;
      int arrive = d.partner(leave);
      f.boundary.push_back({d.arc_at(leave), leave, arrive});
      fm.corner_face[arrive] = id;
      leave = next_leave_slot(arrive);
    }
    f.gon = static_cast<int>(f.boundary.size());
    fm.faces.push_back(std::move(f));
  }
  return fm;
}

inline std::vector<Face> faces(const Diagram& d) { return face_map(d).faces; }

inline bool is_connected(const Diagram& d) {
  if (d.empty()) return true;
  UnionFind uf(d.crossing_count());
  for (int s = 0; s < d.slot_count(); ++s) uf.unite(crossing_of(s), crossing_of(d.partner(s)));
  return uf.set_count() == 1;
}

inline int shadow_component_count(const Diagram& d) {
  if (d.empty()) return 1;
  UnionFind uf(d.crossing_count());
  for (int s = 0; s < d.slot_count(); ++s) uf.unite(crossing_of(s), crossing_of(d.partner(s)));
  return static_cast<int>(uf.set_count());
}

inline void Diagram::check_planar() const {
  // Each shadow component is a connected 4-valent map: V - E + F = 2.
  const int n = crossing_count();
  const int f = static_cast<int>(face_map(*this).faces.size());
  const int c = shadow_component_count(*this);
  if (n - 2 * n + f != 2 * c)
    throw Error(ErrorKind::NonPlanar, "face count " + std::to_string(f) + " violates Euler's formula for " +
                                          std::to_string(n) + " crossings in " + std::to_string(c) +
                                          " component(s)");
}

// ---------------------------------------------------------------------------
// Diagram predicates and quantities

inline bool is_alternating(const Diagram& d) {
  for (const auto& comp : d.natural_entries()) {
    const std::size_t k = comp.size();
    for (std::size_t i = 0; i < k; ++i)
      if (is_under_slot(comp[i]) == is_under_slot(comp[(i + 1) % k])) return false;
  }
  return true;
}

inline bool is_reduced(const Diagram& d) {
  if (d.empty()) return true;
  const FaceMap fm = face_map(d);
  for (int x = 0; x < d.crossing_count(); ++x) {
    std::set<int> seen;
    for (int k = 0; k < 4; ++k) seen.insert(fm.corner_face[slot_of(x, k)]);
    if (seen.size() != 4) return false;
  }
  return true;
}

// +1 / -1 per crossing under the right-hand rule for the current orientation.
inline std::vector<int> crossing_signs(const Diagram& d) {
  std::vector<int> signs(d.crossing_count());
  for (int x = 0; x < d.crossing_count(); ++x) {
    const int u = d.enters_at(slot_of(x, 0)) ? 0 : 2;
    const int o = d.enters_at(slot_of(x, 1)) ? 1 : 3;
    signs[x] = (o == (u + 3) % 4) ? +1 : -1;
  }
  return signs;
}

inline int writhe(const Diagram& d) {
  const auto s = crossing_signs(d);
  return std::accumulate(s.begin(), s.end(), 0);
}

inline bool is_self_crossing(const Diagram& d, int x) {
  return d.component_of_slot(slot_of(x, 0)) == d.component_of_slot(slot_of(x, 1));
}

// Sum of pairwise linking numbers; zero for knots.
inline HalfInt aggregate_linking(const Diagram& d) {
  const auto s = crossing_signs(d);
  std::int64_t twice = 0;
  for (int x = 0; x < d.crossing_count(); ++x)
    if (!is_self_crossing(d, x)) twice += s[x];
  return HalfInt::from_twice(twice);
}

// w(P) - 2 lk(L): signed count of self-crossings, independent of orientation.
inline int self_writhe(const Diagram& d) {
  const auto s = crossing_signs(d);
  int w = 0;
  for (int x = 0; x < d.crossing_count(); ++x)
    if (is_self_crossing(d, x)) w += s[x];
  return w;
}

// All crossings switched; component orientations are kept.
inline Diagram mirror(const Diagram& d) {
  if (d.empty()) return d;
  std::vector<Crossing> out;
  std::vector<int> shift(d.crossing_count());
  for (int x = 0; x < d.crossing_count(); ++x) {
    const auto& e = d.crossings()[x].ends;
    // New tuple starts at the oriented incoming end of the old over-strand.
    if (d.enters_at(slot_of(x, 3))) {
      out.push_back({{e[3], e[0], e[1], e[2]}});
      shift[x] = 1;
    } else {
      out.push_back({{e[1], e[2], e[3], e[0]}});
      shift[x] = 3;
    }
  }
  const std::vector<Crossing> requested = out;
  Diagram m(std::move(out));
  // Match orientations through one oriented passage per component.
  std::vector<bool> rev(m.component_count(), false);
  for (int c = 0; c < d.component_count(); ++c) {
    const int entry = d.oriented_entries(c).front();
    const int x = crossing_of(entry);
    int cand = rotate_slot(entry, shift[x]);
    if (m.crossings()[x] != requested[x]) cand = rotate_slot(cand, 2);
    const int mc = m.component_of_slot(cand);
    const auto& nat = m.natural_entries()[mc];
    rev[mc] = std::find(nat.begin(), nat.end(), cand) == nat.end();
  }
  return m.with_orientation(std::move(rev));
}

// Arcs relabeled 1..2n along the oriented traversal (components by least arc,
// each from its least arc), tuples starting at the oriented incoming
// under-end, crossings sorted. Two diagrams with equal canonical forms are
// the same oriented diagram up to labeling of that traversal.
inline std::vector<Crossing> canonical_pd(const Diagram& d) {
  if (d.empty()) return {};
  std::map<ArcId, ArcId> relabel;
  ArcId next = 1;
  for (int c = 0; c < d.component_count(); ++c)
    for (int e : d.oriented_entries(c)) relabel[d.arc_at(e)] = next++;
  std::vector<Crossing> out;
  for (int x = 0; x < d.crossing_count(); ++x) {
    const auto& e = d.crossings()[x].ends;
    Crossing c{{relabel[e[0]], relabel[e[1]], relabel[e[2]], relabel[e[3]]}};
    if (!d.enters_at(slot_of(x, 0))) std::rotate(c.ends.begin(), c.ends.begin() + 2, c.ends.end());
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Drops '#' comment lines.
inline std::string strip_comments(std::string_view text) {
  std::string out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (trim(line).empty() || trim(line).front() != '#') {
      out.append(line);
      out.push_back('\n');
    }
    pos = nl + 1;
  }
  return out;
}

}  // namespace detail

// Whitespace-separated `X(a,b,c,d)` tuples, or `U` for the 0-crossing unknot.
inline Diagram parse_pd(std::string_view text) {
  const std::string body = detail::strip_comments(text);
  std::string_view s = detail::trim(body);
  if (s.empty()) throw Error(ErrorKind::MalformedTuple, "empty input");
  if (s == "U") return Diagram::unknot();

  std::vector<Crossing> crossings;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::MalformedTuple, why + " at offset " + std::to_string(i));
  };
  while (true) {
    skip_ws();
    if (i >= s.size()) break;
    if (s[i] != 'X') fail(std::string("expected 'X', found '") + s[i] + "'");
    ++i;
    skip_ws();
    if (i >= s.size() || s[i] != '(') fail("expected '('");
    ++i;
    Crossing c;
    for (int k = 0; k < 4; ++k) {
      skip_ws();
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (start == i) fail("expected a positive arc label");
      if (i - start > 9) fail("arc label too large");
      c.ends[k] = std::stoi(std::string(s.substr(start, i - start)));
      skip_ws();
      const char want = k < 3 ? ',' : ')';
      if (i >= s.size() || s[i] != want) fail(std::string("expected '") + want + "'");
      ++i;
    }
    crossings.push_back(c);
  }
  return Diagram(std::move(crossings));
}

// Signed Gauss code: per component `O<k><sign>U<k><sign>...`, components
// joined by ';'. An empty code is the unknot.
inline Diagram parse_gauss(std::string_view text) {
  struct Passage {
    bool over;
    int label;
    int sign;
  };
  const std::string body = detail::strip_comments(text);
  std::string_view s = detail::trim(body);
  if (s.empty()) return Diagram::unknot();

  std::vector<std::vector<Passage>> comps;
  std::size_t pos = 0;
  while (true) {
    std::size_t semi = s.find(';', pos);
    std::string_view part = detail::trim(s.substr(pos, semi == std::string_view::npos ? s.npos : semi - pos));
    std::vector<Passage> comp;
    std::size_t i = 0;
    while (i < part.size()) {
      if (std::isspace(static_cast<unsigned char>(part[i]))) {
        ++i;
        continue;
      }
      if (part[i] != 'O' && part[i] != 'U')
        throw Error(ErrorKind::MalformedCode, std::string("expected 'O' or 'U', found '") + part[i] + "'");
      Passage p{part[i] == 'O', 0, 0};
      ++i;
      std::size_t start = i;
      while (i < part.size() && std::isdigit(static_cast<unsigned char>(part[i]))) ++i;
      if (start == i || i - start > 9) throw Error(ErrorKind::MalformedCode, "missing crossing label");
      p.label = std::stoi(std::string(part.substr(start, i - start)));
      if (i >= part.size() || (part[i] != '+' && part[i] != '-'))
        throw Error(ErrorKind::MalformedCode, "missing sign after crossing " + std::to_string(p.label));
      p.sign = part[i] == '+' ? 1 : -1;
      ++i;
      comp.push_back(p);
    }
    comps.push_back(std::move(comp));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  for (const auto& c : comps)
    if (c.empty()) {
      if (comps.size() == 1) return Diagram::unknot();
      throw Error(ErrorKind::MalformedCode, "crossingless component in a multi-component code");
    }

  struct Seen {
    int over_in = -1, over_out = -1, under_in = -1, under_out = -1, sign = 0, count_o = 0, count_u = 0;
  };
  std::map<int, Seen> seen;
  ArcId base = 1;
  for (const auto& comp : comps) {
    const int len = static_cast<int>(comp.size());
    for (int j = 0; j < len; ++j) {
      const ArcId in = base + j;
      const ArcId out = base + (j + 1) % len;
      auto& e = seen[comp[j].label];
      if (e.sign != 0 && e.sign != comp[j].sign)
        throw Error(ErrorKind::MalformedCode, "inconsistent sign for crossing " + std::to_string(comp[j].label));
      e.sign = comp[j].sign;
      if (comp[j].over) {
        ++e.count_o;
        e.over_in = in;
        e.over_out = out;
      } else {
        ++e.count_u;
        e.under_in = in;
        e.under_out = out;
      }
    }
    base += len;
  }
  std::vector<Crossing> crossings;
  for (const auto& [label, e] : seen) {
    if (e.count_o != 1 || e.count_u != 1)
      throw Error(ErrorKind::MalformedCode,
                  "crossing " + std::to_string(label) + " needs exactly one over and one under passage");
    if (e.sign > 0)
      crossings.push_back({{e.under_in, e.over_out, e.under_out, e.over_in}});
    else
      crossings.push_back({{e.under_in, e.over_in, e.under_out, e.over_out}});
  }
  try {
    return Diagram(std::move(crossings));
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::NonPlanar) throw Error(ErrorKind::NonRealizable, err.what());
    throw;
  }
}

// Signed Gauss code of the oriented diagram; crossings numbered by first visit.
inline std::string to_gauss(const Diagram& d) {
  if (d.empty()) return "";
  const auto signs = crossing_signs(d);
  std::vector<int> label(d.crossing_count(), 0);
  int next = 1;
  std::ostringstream os;
  for (int c = 0; c < d.component_count(); ++c) {
    if (c) os << ';';
    for (int e : d.oriented_entries(c)) {
      const int x = crossing_of(e);
      if (!label[x]) label[x] = next++;
      os << (is_under_slot(e) ? 'U' : 'O') << label[x] << (signs[x] > 0 ? '+' : '-');
    }
  }
  return os.str();
}

}  // namespace spanlift
