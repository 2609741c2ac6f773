#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

namespace spanlift {
namespace {

using namespace spanlift::testing;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no spanlift::Error thrown";
  return ErrorKind::SchemaError;
}

TEST(ParsePd, Trefoil) {
  const Diagram d = parse_pd(kTrefoil);
  EXPECT_EQ(d.crossing_count(), 3);
  EXPECT_EQ(d.component_count(), 1);
  EXPECT_EQ(faces(d).size(), 5u);
}

TEST(ParsePd, UnknotToken) {
  const Diagram d = parse_pd("U");
  EXPECT_TRUE(d.empty());
  EXPECT_EQ(d.component_count(), 1);
  EXPECT_EQ(faces(d).size(), 2u);
}

TEST(ParsePd, CommentsAndWhitespace) {
  const Diagram d = parse_pd("# trefoil\n  X(1, 4, 2, 5)\nX(3,6,4,1)\tX(5,2,6,3)\n");
  EXPECT_EQ(d, parse_pd(kTrefoil));
}

TEST(ParsePd, Errors) {
  EXPECT_EQ(kind_of([] { parse_pd("X(1,2,3,4)"); }), ErrorKind::DanglingArc);
  EXPECT_EQ(kind_of([] { parse_pd(""); }), ErrorKind::MalformedTuple);
  EXPECT_EQ(kind_of([] { parse_pd("X(1,2,3)"); }), ErrorKind::MalformedTuple);
  EXPECT_EQ(kind_of([] { parse_pd("Y(1,1,2,2)"); }), ErrorKind::MalformedTuple);
  EXPECT_EQ(kind_of([] { parse_pd("X(0,1,1,0)"); }), ErrorKind::MalformedTuple);
  // Two crossings glued so that the face count breaks the Euler formula.
  EXPECT_EQ(kind_of([] { parse_pd("X(1,2,3,4) X(1,3,2,4)"); }), ErrorKind::NonPlanar);
}

TEST(Faces, TrefoilGons) {
  EXPECT_EQ(gon_multiset(parse_pd(kTrefoil)), (std::multiset<int>{2, 2, 2, 3, 3}));
}

TEST(Faces, UnknotGons) { EXPECT_EQ(gon_multiset(parse_pd("U")), (std::multiset<int>{0, 0})); }

TEST(Faces, FigureEightAgreesWithCornerGluing) {
  const Diagram d = census_diagram("4_1");
  const auto gons = gon_multiset(d);
  EXPECT_EQ(gons.size(), 6u);
  EXPECT_EQ(std::accumulate(gons.begin(), gons.end(), 0), 16);
  EXPECT_EQ(gons, corner_gluing_gons(d));
  EXPECT_EQ(gons, (std::multiset<int>{2, 2, 3, 3, 3, 3}));
}

TEST(Faces, CensusEulerAndGluingOracle) {
  for (const auto& e : census()) {
    const Diagram d = parse_pd(e.pd);
    const auto gons = gon_multiset(d);
    EXPECT_EQ(static_cast<int>(gons.size()), d.crossing_count() + 2) << e.name;
    EXPECT_EQ(std::accumulate(gons.begin(), gons.end(), 0), 4 * d.crossing_count()) << e.name;
    EXPECT_EQ(gons, corner_gluing_gons(d)) << e.name;
  }
}

TEST(Faces, BoundaryArcsAreConsistent) {
  const Diagram d = census_diagram("6_2^2");
  const FaceMap fm = face_map(d);
  int sides = 0;
  for (const auto& f : fm.faces) {
    sides += static_cast<int>(f.boundary.size());
    for (const auto& side : f.boundary) {
      EXPECT_EQ(d.partner(side.from_slot), side.to_slot);
      EXPECT_EQ(d.arc_at(side.from_slot), side.arc);
    }
  }
  EXPECT_EQ(sides, 2 * d.slot_count() / 2);
}

TEST(Alternating, Examples) {
  EXPECT_TRUE(is_alternating(parse_pd(kTrefoil)));
  EXPECT_TRUE(is_alternating(parse_pd("U")));
  // One crossing switched: the tuple now starts at the old over-strand.
  EXPECT_FALSE(is_alternating(parse_pd("X(5,1,4,2) X(3,6,4,1) X(5,2,6,3)")));
}

TEST(Alternating, InvariantUnderRelabelingAndMirror) {
  for (const auto& d : census_diagrams()) {
    EXPECT_TRUE(is_alternating(d));
    EXPECT_TRUE(is_alternating(mirror(d)));
    EXPECT_TRUE(is_alternating(Diagram(canonical_pd(d))));
  }
}

TEST(Reduced, Examples) {
  EXPECT_TRUE(is_reduced(parse_pd(kTrefoil)));
  EXPECT_FALSE(is_reduced(parse_pd("X(1,2,2,1)")));
  const Diagram with_kink = parse_pd("X(1,4,2,5) X(3,8,4,1) X(5,2,6,3) X(6,7,7,8)");
  EXPECT_EQ(with_kink.crossing_count(), 4);
  EXPECT_TRUE(is_connected(with_kink));
  EXPECT_FALSE(is_reduced(with_kink));
}

TEST(Connected, Examples) {
  EXPECT_TRUE(is_connected(parse_pd(kTrefoil)));
  EXPECT_TRUE(is_connected(parse_pd(kHopf)));
  const Diagram two = parse_pd(std::string(kTrefoil) + " X(7,10,8,11) X(9,12,10,7) X(11,8,12,9)");
  EXPECT_EQ(two.component_count(), 2);
  EXPECT_FALSE(is_connected(two));
  EXPECT_EQ(shadow_component_count(two), 2);
  // Faces are listed per shadow piece: 5 + 5.
  EXPECT_EQ(faces(two).size(), 10u);
}

TEST(Signs, Trefoil) {
  const auto s = crossing_signs(parse_pd(kTrefoil));
  EXPECT_EQ(s[0], s[1]);
  EXPECT_EQ(s[1], s[2]);
  EXPECT_EQ(std::abs(writhe(parse_pd(kTrefoil))), 3);
}

TEST(Signs, FigureEight) {
  const auto s = crossing_signs(census_diagram("4_1"));
  EXPECT_EQ(std::count(s.begin(), s.end(), 1), 2);
  EXPECT_EQ(std::count(s.begin(), s.end(), -1), 2);
  EXPECT_EQ(writhe(census_diagram("4_1")), 0);
}

TEST(Signs, HopfAndUnknot) {
  const auto s = crossing_signs(parse_pd(kHopf));
  EXPECT_EQ(s[0], s[1]);
  EXPECT_EQ(writhe(parse_pd("U")), 0);
}

TEST(Signs, OrientationReversal) {
  for (const auto& d : census_diagrams()) {
    const int k = d.component_count();
    const auto base = crossing_signs(d);
    EXPECT_EQ(crossing_signs(d.with_orientation(std::vector<bool>(k, true))), base);
    for (int c = 0; c < k && k > 1; ++c) {
      std::vector<bool> rev(k, false);
      rev[c] = true;
      const auto flipped = crossing_signs(d.with_orientation(rev));
      for (int x = 0; x < d.crossing_count(); ++x) {
        const int a = d.component_of_slot(slot_of(x, 0));
        const int b = d.component_of_slot(slot_of(x, 1));
        const bool between = a != b && (a == c || b == c);
        EXPECT_EQ(flipped[x], between ? -base[x] : base[x]);
      }
    }
  }
}

TEST(Linking, Examples) {
  EXPECT_EQ(aggregate_linking(parse_pd(kTrefoil)), HalfInt{});
  const HalfInt hopf = aggregate_linking(parse_pd(kHopf));
  EXPECT_TRUE(hopf == H("1") || hopf == H("-1"));
  EXPECT_EQ(self_writhe(parse_pd(kHopf)), 0);
  EXPECT_EQ(self_writhe(parse_pd(kTrefoil)), writhe(parse_pd(kTrefoil)));
}

TEST(Linking, SelfWritheIndependentOfOrientation) {
  std::vector<Diagram> ds = census_diagrams();
  ds.push_back(parse_pd(kWhitehead));
  for (const auto& d : ds) {
    const int k = d.component_count();
    const int sw = self_writhe(d);
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::vector<bool> rev(k);
      for (int c = 0; c < k; ++c) rev[c] = (mask >> c) & 1;
      const Diagram o = d.with_orientation(rev);
      EXPECT_EQ(self_writhe(o), sw);
      EXPECT_EQ(HalfInt::from_int(writhe(o)) - (aggregate_linking(o) + aggregate_linking(o)), HalfInt::from_int(sw));
    }
  }
}

TEST(Linking, Whitehead) {
  const Diagram w = parse_pd(kWhitehead);
  EXPECT_EQ(w.component_count(), 2);
  EXPECT_EQ(aggregate_linking(w), HalfInt{});
}

TEST(Mirror, Involution) {
  for (const auto& d : census_diagrams()) {
    const Diagram m = mirror(d);
    EXPECT_EQ(canonical_pd(mirror(m)), canonical_pd(d));
    EXPECT_EQ(writhe(m), -writhe(d));
    EXPECT_EQ(aggregate_linking(m), HalfInt{} - aggregate_linking(d));
  }
}

TEST(Mirror, ExchangesAllAAndAllB) {
  for (const auto& d : census_diagrams()) {
    const int n = d.crossing_count();
    const Diagram m = mirror(d);
    EXPECT_EQ(resolve(m, State::uniform(n, Split::A)).f, resolve(d, State::uniform(n, Split::B)).f);
    EXPECT_EQ(resolve(m, State::uniform(n, Split::B)).f, resolve(d, State::uniform(n, Split::A)).f);
  }
}

TEST(Gauss, Trefoil) {
  const Diagram g = parse_gauss("O1-U2-O3-U1-O2-U3-");
  const Diagram p = parse_pd(kTrefoil);
  EXPECT_EQ(g.crossing_count(), 3);
  EXPECT_EQ(gon_multiset(g), gon_multiset(p));
  EXPECT_TRUE(is_alternating(g));
  EXPECT_EQ(writhe(g), -3);
}

TEST(Gauss, SmallCodes) {
  EXPECT_TRUE(parse_gauss("").empty());
  const Diagram kink = parse_gauss("O1-U1-");
  EXPECT_EQ(kink.crossing_count(), 1);
  EXPECT_FALSE(is_reduced(kink));
}

TEST(Gauss, Errors) {
  EXPECT_EQ(kind_of([] { parse_gauss("O1-U2-"); }), ErrorKind::MalformedCode);
  EXPECT_EQ(kind_of([] { parse_gauss("O1U1-"); }), ErrorKind::MalformedCode);
  EXPECT_EQ(kind_of([] { parse_gauss("O1-Q1-"); }), ErrorKind::MalformedCode);
  // Interleaved passages with no planar embedding.
  EXPECT_EQ(kind_of([] { parse_gauss("O1-O2-U1-U2-"); }), ErrorKind::NonRealizable);
}

TEST(Gauss, RoundTripOverCensus) {
  for (const auto& e : census()) {
    const Diagram d = parse_pd(e.pd);
    const Diagram g = parse_gauss(to_gauss(d));
    EXPECT_EQ(canonical_pd(g), canonical_pd(d)) << e.name;
    EXPECT_EQ(to_gauss(g), to_gauss(d)) << e.name;
  }
}

TEST(Canonical, RandomRelabelingInvariant) {
  for (const auto& d : random_corpus(11, 40, 3, 10)) {
    const Diagram c(canonical_pd(d));
    EXPECT_EQ(canonical_pd(c), canonical_pd(d));
    EXPECT_EQ(gon_multiset(c), corner_gluing_gons(d));
  }
}

}  // namespace
}  // namespace spanlift
