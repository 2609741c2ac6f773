#pragma once

// Random reduced alternating diagrams for property tests.
//
// Shadows grow from the Hopf shadow by inverse smoothings: two sides of one
// face are pinched together into a new crossing, which keeps the map planar
// and connected. Crossing information then follows a checkerboard coloring,
// which makes the diagram alternating; non-reduced results are redrawn.

#include <random>
#include <stdexcept>
#include <vector>

#include "spanlift/diagram.hpp"

namespace spanlift {

namespace detail {

struct Shadow {
  std::vector<int> partner;  // slot -> slot across an edge

  int crossings() const { return static_cast<int>(partner.size()) / 4; }

  // Faces as lists of the slots their boundary leaves through.
  std::vector<std::vector<int>> faces() const {
    std::vector<std::vector<int>> out;
    std::vector<char> used(partner.size(), 0);
    for (int start = 0; start < static_cast<int>(partner.size()); ++start) {
      if (used[start]) continue;
      std::vector<int> sides;
      for (int leave = start; !used[leave]; leave = next_leave_slot(partner[leave])) {
        used[leave] = 1;
        sides.push_back(leave);
      }
      out.push_back(std::move(sides));
    }
    return out;
  }

  void link(int a, int b) {
    partner[a] = b;
    partner[b] = a;
  }

  // Pinches the directed sides leaving s_i and s_j of a common face.
  void pinch(int s_i, int s_j) {
    const int t_i = partner[s_i];
    const int t_j = partner[s_j];
    const int x = crossings();
    partner.resize(partner.size() + 4);
    link(slot_of(x, 0), t_i);
    link(slot_of(x, 1), s_j);
    link(slot_of(x, 2), t_j);
    link(slot_of(x, 3), s_i);
  }
};

inline Shadow hopf_shadow() {
  Shadow s;
  s.partner.assign(8, -1);
  s.link(0, 5);
  s.link(1, 4);
  s.link(2, 7);
  s.link(3, 6);
  return s;
}

inline Diagram alternating_from_shadow(const Shadow& sh) {
  const int slots = static_cast<int>(sh.partner.size());
  // Face of the side leaving each slot, and of the corner entered by arriving at it.
  std::vector<int> side_face(slots, -1), corner_face(slots, -1);
  const auto fs = sh.faces();
  for (int f = 0; f < static_cast<int>(fs.size()); ++f)
    for (int leave : fs[f]) {
      side_face[leave] = f;
      corner_face[sh.partner[leave]] = f;
    }
  // Two-color the faces: the two sides of an edge differ.
  std::vector<int> color(fs.size(), -1);
  std::vector<int> stack{0};
  color[0] = 0;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int leave : fs[f]) {
      const int g = side_face[sh.partner[leave]];
      if (color[g] == -1) {
        color[g] = 1 - color[f];
        stack.push_back(g);
      } else if (color[g] == color[f]) {
        throw std::logic_error("shadow faces are not two-colorable");
      }
    }
  }
  std::vector<ArcId> arc(slots, 0);
  ArcId next = 1;
  for (int s = 0; s < slots; ++s)
    if (arc[s] == 0) arc[s] = arc[sh.partner[s]] = next++;

  std::vector<Crossing> xs;
  for (int x = 0; x < sh.crossings(); ++x) {
    // Start the tuple so the (1,2) corner is black: every crossing then has
    // its A-corners on the same color, i.e. the diagram alternates.
    const int u = color[corner_face[slot_of(x, 2)]] == 0 ? 0 : 1;
    Crossing c;
    for (int k = 0; k < 4; ++k) c.ends[k] = arc[slot_of(x, (u + k) % 4)];
    xs.push_back(c);
  }
  Diagram d(std::move(xs));
  return Diagram(canonical_pd(d));
}

}  // namespace detail

// A reduced alternating connected diagram with exactly n >= 2 crossings.
template <class Rng>
Diagram random_reduced_alternating(Rng& rng, int n, int max_attempts = 100000) {
  if (n < 2) throw std::invalid_argument("random diagrams need at least two crossings");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    detail::Shadow sh = detail::hopf_shadow();
    while (sh.crossings() < n) {
      const auto fs = sh.faces();
      std::uniform_int_distribution<std::size_t> pick_face(0, fs.size() - 1);
      const auto& face = fs[pick_face(rng)];
      if (face.size() < 2) continue;
      std::uniform_int_distribution<std::size_t> pick_side(0, face.size() - 1);
      const std::size_t i = pick_side(rng);
      std::size_t j = pick_side(rng);
      if (i == j) continue;
      sh.pinch(face[i], face[j]);
    }
    Diagram d = detail::alternating_from_shadow(sh);
    if (is_reduced(d)) return d;
  }
  throw std::runtime_error("no reduced diagram found");
}

}  // namespace spanlift
