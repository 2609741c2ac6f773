#pragma once

// Minimal-genus search over layered surfaces of reduced alternating diagrams,
// nonorientable and orientable genus, and the classification of achievable
// (Euler characteristic, aggregate slope, orientability) triples.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spanlift/diagram.hpp"
#include "spanlift/error.hpp"
#include "spanlift/half_int.hpp"
#include "spanlift/state_surface.hpp"

namespace spanlift {

inline void require_reduced_alternating_connected(const Diagram& d) {
  if (!is_connected(d)) throw Error(ErrorKind::Disconnected, "diagram is split; analyze each piece separately");
  if (!is_alternating(d)) throw Error(ErrorKind::NotAlternating, "diagram is not alternating");
  if (!is_reduced(d)) throw Error(ErrorKind::NotReduced, "diagram has a nugatory crossing");
}

// A diagram with some crossings already smoothed. Strands through smoothed
// crossings are spliced together so the remaining crossings form an ordinary
// 4-valent map; circles that close up with no crossing left are counted.
class SmoothedProjection {
 public:
  explicit SmoothedProjection(const Diagram& d)
      : partner_(d.slot_count()), splits_(d.crossing_count(), -1), remaining_(d.crossing_count()) {
    for (int s = 0; s < d.slot_count(); ++s) partner_[s] = d.partner(s);
    if (d.empty()) freed_ = 1;
  }

  int remaining() const { return remaining_; }
  int freed() const { return freed_; }
  bool smoothed(int crossing) const { return splits_[crossing] >= 0; }

  void smooth(int crossing, Split s) {
    if (smoothed(crossing)) throw std::logic_error("crossing smoothed twice");
    splits_[crossing] = static_cast<int>(s);
    --remaining_;
    for (int p : {0, smoothing_partner(0, s) == 1 ? 2 : 1}) {
      const int q = smoothing_partner(p, s);
      join(slot_of(crossing, p), slot_of(crossing, q));
    }
  }

  State state() const {
    std::vector<Split> v(splits_.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (splits_[i] < 0) throw std::logic_error("state requested before every crossing is smoothed");
      v[i] = static_cast<Split>(splits_[i]);
    }
    return State(std::move(v));
  }

  // Faces of the remaining map, each as the list of slots arrived at along its
  // boundary (one per corner). Faces are per connected piece.
  std::vector<std::vector<int>> faces() const {
    std::vector<std::vector<int>> out;
    std::vector<char> used(partner_.size(), 0);
    for (int start = 0; start < static_cast<int>(partner_.size()); ++start) {
      if (smoothed(crossing_of(start)) || used[start]) continue;
      std::vector<int> corners;
      int leave = start;
      while (!used[leave]) {
        used[leave] = 1;
        const int arrive = partner_[leave];
        corners.push_back(arrive);
        leave = next_leave_slot(arrive);
      }
      out.push_back(std::move(corners));
    }
    return out;
  }

 private:
  void join(int p, int q) {
    const int u = partner_[p];
    const int v = partner_[q];
    if (u == q) {
      ++freed_;
    } else {
      partner_[u] = v;
      partner_[v] = u;
    }
    partner_[p] = partner_[q] = -1;
  }

  std::vector<int> partner_;
  std::vector<int> splits_;
  int remaining_ = 0;
  int freed_ = 0;
};

inline constexpr std::size_t kWitnessCap = 64;

struct MinGenusResult {
  int crossings = 0;
  int best_f = 0;
  std::vector<State> witnesses;  // first kWitnessCap optimal states, sorted
  std::size_t witness_count = 0;
  GenusValue min_genus;
  bool all_minimizers_orientable = true;
  bool any_minimizer_orientable = false;

  int max_euler() const { return best_f - crossings; }
};

namespace detail {

struct OptimumTracker {
  explicit OptimumTracker(const Diagram* diagram) : d(diagram) {}

  const Diagram* d = nullptr;
  int best_f = -1;
  std::set<State> states;

  void offer(int f, const State& s) {
    if (f < best_f) return;
    if (f > best_f) {
      best_f = f;
      states.clear();
    }
    states.insert(s);
  }

  MinGenusResult finish() const {
    MinGenusResult r;
    r.crossings = d->crossing_count();
    r.best_f = best_f;
    r.witness_count = states.size();
    for (const auto& s : states) {
      const bool o = is_orientable(*d, s);
      r.all_minimizers_orientable = r.all_minimizers_orientable && o;
      r.any_minimizer_orientable = r.any_minimizer_orientable || o;
      if (r.witnesses.size() < kWitnessCap) r.witnesses.push_back(s);
    }
    r.min_genus = genus_from(r.max_euler(), d->component_count(), r.all_minimizers_orientable);
    return r;
  }
};

inline void run_mga(SmoothedProjection p, OptimumTracker& acc) {
  while (p.remaining() > 0) {
    const auto fs = p.faces();
    std::size_t pick = 0;
    for (std::size_t i = 1; i < fs.size(); ++i)
      if (fs[i].size() < fs[pick].size()) pick = i;
    const auto& face = fs[pick];

    // Splits that turn the chosen face into a circle.
    std::map<int, Split> closing;
    for (int arrive : face) {
      const int x = crossing_of(arrive);
      const Split s = closing_split((pos_of(arrive) + 3) % 4, pos_of(arrive));
      auto [it, fresh] = closing.emplace(x, s);
      if (!fresh && it->second != s) throw std::logic_error("face meets a crossing at adjacent corners");
    }

    if (face.size() > 3) throw std::logic_error("no face with at most three corners");
    if (face.size() == 3) {
      SmoothedProjection other = p;
      for (auto [x, s] : closing) other.smooth(x, flip(s));
      run_mga(std::move(other), acc);
    }
    for (auto [x, s] : closing) p.smooth(x, s);
  }
  acc.offer(p.freed(), p.state());
}

}  // namespace detail

// Greedily closes the smallest face when it has at most two corners and
// branches both ways on a triangle otherwise.
inline MinGenusResult minimal_genus_algorithm(const Diagram& d) {
  require_reduced_alternating_connected(d);
  detail::OptimumTracker acc(&d);
  detail::run_mga(SmoothedProjection(d), acc);
  return acc.finish();
}

// Exact optimum over all 2^n states.
inline MinGenusResult brute_force_min_genus(const Diagram& d, bool basic_only,
                                            int bound = exhaustive_bound_from_env()) {
  detail::OptimumTracker acc(&d);
  for_each_state(
      d, basic_only ? StateFilter::Basic : StateFilter::All,
      [&](const State& s, const StateSurface& surf) { acc.offer(surf.f, s); }, bound);
  if (acc.best_f < 0) throw std::logic_error("no state passed the filter");
  return acc.finish();
}

// Genus of the Seifert surface for the diagram's current orientation.
inline GenusValue orientable_genus(const Diagram& d) {
  require_reduced_alternating_connected(d);
  const StateSurface surf = resolve(d, seifert_state(d));
  return genus_from(surf.euler, surf.boundary_components, true);
}

struct NonorientableGenus {
  GenusValue genus;
  MinGenusResult basic_optimum;
  bool crosscap_added = false;  // every minimal basic surface was orientable
};

inline NonorientableGenus nonorientable_genus_detail(const Diagram& d, int bound = exhaustive_bound_from_env()) {
  require_reduced_alternating_connected(d);
  NonorientableGenus out;
  out.basic_optimum = brute_force_min_genus(d, true, bound);
  const auto& opt = out.basic_optimum;
  const GenusValue base = genus_from(opt.max_euler(), d.component_count(), false);
  out.crosscap_added = opt.all_minimizers_orientable;
  out.genus = {out.crosscap_added ? base.value + kHalf : base.value, false};
  return out;
}

inline GenusValue nonorientable_genus(const Diagram& d, int bound = exhaustive_bound_from_env()) {
  return nonorientable_genus_detail(d, bound).genus;
}

// ---------------------------------------------------------------------------
// Classification

struct SurfaceClass {
  int euler = 0;
  int slope = 0;
  bool orientable = true;

  auto operator<=>(const SurfaceClass&) const = default;
};

// Each + crosscap raises the slope by two, each - crosscap lowers it by two;
// both cost one from chi. A handle costs two and keeps the slope.
inline SurfaceClass crosscap_additions(const SurfaceClass& base, int c_plus, int c_minus, int handles) {
  if (c_plus < 0 || c_minus < 0 || handles < 0) throw std::invalid_argument("negative addition count");
  return {base.euler - c_plus - c_minus - 2 * handles, base.slope + 2 * c_plus - 2 * c_minus,
          base.orientable && c_plus + c_minus == 0};
}

struct Spectrum {
  std::set<SurfaceClass> base;  // from basic states
  int euler_floor = 0;
  std::set<SurfaceClass> classes;

  bool contains(const SurfaceClass& q) const { return classes.count(q) > 0; }
  int max_euler() const {
    int m = base.begin()->euler;
    for (const auto& b : base) m = std::max(m, b.euler);
    return m;
  }
};

inline constexpr int kDefaultSpectrumDepth = 8;

inline std::set<SurfaceClass> spectrum_base(const Diagram& d, int bound = exhaustive_bound_from_env()) {
  require_reduced_alternating_connected(d);
  std::set<SurfaceClass> base;
  for_each_state(
      d, StateFilter::Basic,
      [&](const State&, const StateSurface& s) { base.insert({s.euler, s.slope, s.orientable}); }, bound);
  return base;
}

inline Spectrum spectrum_from_base(std::set<SurfaceClass> base, int euler_floor) {
  Spectrum sp;
  sp.base = std::move(base);
  sp.euler_floor = euler_floor;
  for (const auto& b : sp.base) {
    for (int delta = 0; b.euler - delta >= euler_floor; ++delta) {
      for (int q = 0; b.euler - delta - 2 * q >= euler_floor; ++q) {
        const int x = b.euler - delta - 2 * q;
        for (int sgn : {1, -1}) {
          if (delta == 0 && sgn < 0) continue;
          const int l = b.slope + sgn * 2 * delta;
          if (delta == 0 && b.orientable) sp.classes.insert({x, l, true});
          if (!b.orientable || delta > 0 || q > 0) sp.classes.insert({x, l, false});
        }
      }
    }
  }
  return sp;
}

inline Spectrum spectrum(const Diagram& d, std::optional<int> euler_floor = std::nullopt,
                         int bound = exhaustive_bound_from_env()) {
  auto base = spectrum_base(d, bound);
  int top = base.begin()->euler;
  for (const auto& b : base) top = std::max(top, b.euler);
  return spectrum_from_base(std::move(base), euler_floor.value_or(top - kDefaultSpectrumDepth));
}

enum class Verdict { Achievable, NotAchievable, OddSlope };

struct Witness {
  SurfaceClass base;
  int c_plus = 0;
  int c_minus = 0;
  int handles = 0;
};

struct Classification {
  Verdict verdict = Verdict::NotAchievable;
  std::optional<Witness> witness;
};

// Membership of q in the closure of `base`, with the first witness in base order.
inline Classification classify_against(const std::set<SurfaceClass>& base, const SurfaceClass& q) {
  Classification out;
  if (q.slope % 2 != 0) {
    out.verdict = Verdict::OddSlope;
    return out;
  }
  for (const auto& b : base) {
    const int delta = std::abs(q.slope - b.slope) / 2;
    const int rem = b.euler - delta - q.euler;
    if (rem < 0 || rem % 2 != 0) continue;
    const int pairs = rem / 2;
    Witness w{b, 0, 0, 0};
    if (q.slope > b.slope) w.c_plus = delta;
    if (q.slope < b.slope) w.c_minus = delta;
    if (q.orientable) {
      if (delta != 0 || !b.orientable) continue;
      w.handles = pairs;
    } else {
      if (b.orientable && delta == 0 && pairs == 0) continue;
      if (b.orientable && delta == 0) {
        // One crosscap of each sign keeps the slope.
        w.c_plus = 1;
        w.c_minus = 1;
        w.handles = pairs - 1;
      } else {
        w.handles = pairs;
      }
    }
    out.verdict = Verdict::Achievable;
    out.witness = w;
    return out;
  }
  return out;
}

inline Classification classify(const Diagram& d, const SurfaceClass& q, int bound = exhaustive_bound_from_env()) {
  return classify_against(spectrum_base(d, bound), q);
}

inline bool achievable(const Diagram& d, const SurfaceClass& q, int bound = exhaustive_bound_from_env()) {
  if (q.slope % 2 != 0)
    throw Error(ErrorKind::OddSlope, "aggregate slope " + std::to_string(q.slope) + " is odd");
  return classify(d, q, bound).verdict == Verdict::Achievable;
}

}  // namespace spanlift
