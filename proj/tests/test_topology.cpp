#include <gtest/gtest.h>

#include "selgame/error.hpp"
#include "selgame/topology/cover.hpp"
#include "selgame/topology/registry.hpp"
#include "selgame/topology/serialize.hpp"
#include "selgame/topology/space.hpp"

using namespace selgame;
using namespace selgame::topology;

namespace {

PointId q(const char* s) { return PointId::rat(parse_rational(s)); }
PointId q(int v) { return PointId::rat(Rational(v)); }

SpacePtr real() { return make_space("R", SpaceKind::RealLine); }

// Independent oracle: a closed interval sits in an open one iff both ends are strictly inside.
bool closed_in_open(const Rational& a, const Rational& b, const Rational& lo, const Rational& hi) {
  return lo < a && b < hi;
}

}  // namespace

TEST(Member, IntervalHalf) {
  EXPECT_TRUE(member(*real(), q("1/2"), interval(Rational(0), Rational(1))));
  EXPECT_FALSE(member(*real(), q(1), interval(Rational(0), Rational(1))));
}

TEST(Member, FortissimoInfinityNeverExcluded) {
  auto f = make_space("F", SpaceKind::Fortissimo);
  OpenDesc u = co_named({PointId::nat(3), PointId::nat(7)});
  EXPECT_TRUE(member(*f, PointId::infinity(), u));
  EXPECT_FALSE(member(*f, PointId::nat(3), u));
}

TEST(Member, BaireCylinderPrefix) {
  auto b = make_space("B", SpaceKind::Baire);
  EXPECT_TRUE(member(*b, PointId::word({0, 1, 2}), cylinder({0, 1})));
  EXPECT_FALSE(member(*b, PointId::word({0, 2}), cylinder({0, 1})));
  EXPECT_TRUE(member(*b, PointId::word({3}), cylinder({3, 0, 0})));
}

TEST(Member, TypeMismatchIsReported) {
  try {
    member(*real(), PointId::nat(1), interval(Rational(0), Rational(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TypeMismatch);
  }
  EXPECT_THROW(member(*real(), q(1), cylinder({0})), Error);
}

TEST(Contains, UnitIntervalEndpoints) {
  EXPECT_TRUE(contains(*real(), closed(0, 1), interval(Rational(-1), Rational(2))));
  EXPECT_FALSE(contains(*real(), closed(0, 1), interval(Rational(0), Rational(2))));
}

TEST(Contains, SquareInSquareMatchesFactorwiseOracle) {
  auto r2 = make_power("R2", real(), 2);
  std::vector<Rational> ends{Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
  for (const auto& lo : ends) {
    for (const auto& hi : ends) {
      if (lo >= hi) continue;
      OpenDesc u = rectangle({interval(lo, hi), interval(Rational(-1), Rational(2))});
      bool expect = closed_in_open(0, 1, lo, hi);
      EXPECT_EQ(contains(*r2, product({closed(0, 1), closed(0, 1)}), u), expect);
    }
  }
  EXPECT_TRUE(contains(*r2, product({closed(0, 1), closed(0, 1)}),
                       rectangle({interval(Rational(-1), Rational(2)), interval(Rational(-1), Rational(2))})));
}

TEST(Contains, UnionOfOverlappingIntervalsCoversByCells) {
  OpenDesc u = unite(interval(Rational(-1), Rational(1)), interval(Rational(1, 2), Rational(3)));
  EXPECT_TRUE(contains(*real(), closed(0, 2), u));
  OpenDesc gap = unite(interval(Rational(-1), Rational(1)), interval(Rational(1), Rational(3)));
  EXPECT_FALSE(contains(*real(), closed(0, 2), gap));
  EXPECT_TRUE(contains(*real(), points({q(0), q(2)}), gap));
}

TEST(Contains, LShapeCoversSquareOnlyJointly) {
  auto r2 = make_power("R2", real(), 2);
  OpenDesc l = unite(rectangle({interval(Rational(-1), Rational(1, 2)), interval(Rational(-1), Rational(2))}),
                     rectangle({interval(Rational(0), Rational(2)), interval(Rational(-1), Rational(2))}));
  EXPECT_TRUE(contains(*r2, product({closed(0, 1), closed(0, 1)}), l));
}

TEST(Sat, T1ModelsSatIsIdentity) {
  auto r = real();
  SetDesc a = points({q(1), q(3)});
  for (std::uint64_t k = 0; k < 200; ++k) {
    PointId x = point_at(*r, k);
    EXPECT_EQ(in_sat(*r, x, a), in_set(x, a));
  }
  auto d = make_space("N", SpaceKind::DiscreteN);
  for (std::uint64_t k = 0; k < 50; ++k) EXPECT_EQ(in_sat(*d, PointId::nat(k), point_set(PointId::nat(4))), k == 4);
}

TEST(Sat, RightOrderSaturationIsUpperRay) {
  auto ro = make_space("RO", SpaceKind::RightOrder);
  EXPECT_FALSE(ro->flags.t1);
  for (std::uint64_t k = 0; k < 300; ++k) {
    PointId x = point_at(*ro, k);
    for (int n = -3; n <= 3; ++n) EXPECT_EQ(in_sat(*ro, x, point_set(q(n))), *x.numeric() >= n);
  }
}

TEST(Compactness, ClosedIntervalsDependOnModel) {
  EXPECT_TRUE(is_compact(*real(), closed(0, 1)));
  EXPECT_FALSE(is_compact(*make_space("Q", SpaceKind::RationalLine), closed(0, 1)));
  EXPECT_FALSE(is_compact(*real(), open_set(0, 1)));
  EXPECT_TRUE(is_relatively_compact(*real(), open_set(0, 1)));
}

TEST(PointOutside, FindsExcludedPoints) {
  auto p = point_outside(*real(), interval(Rational(0), Rational(1)));
  ASSERT_TRUE(p);
  EXPECT_FALSE(member(*p, interval(Rational(0), Rational(1))));
  EXPECT_FALSE(point_outside(*real(), whole()));
  EXPECT_FALSE(point_outside(*real(), unite(interval(std::nullopt, Rational(1)), interval(Rational(0), std::nullopt))));
  auto f = make_space("F", SpaceKind::Fortissimo);
  EXPECT_EQ(point_outside(*f, co_named({PointId::nat(5)})), PointId::nat(5));
  auto b = make_space("B", SpaceKind::Baire);
  auto w = point_outside(*b, unite(cylinder({0}), cylinder({1, 4})));
  ASSERT_TRUE(w);
  EXPECT_FALSE(member(*w, unite(cylinder({0}), cylinder({1, 4}))));
}

TEST(OpenSubset, DecidesOverCells) {
  auto r = real();
  EXPECT_TRUE(open_subset(*r, interval(Rational(0), Rational(1)), interval(Rational(-1), Rational(1))));
  EXPECT_FALSE(open_subset(*r, interval(Rational(0), Rational(2)), interval(Rational(-1), Rational(1))));
  EXPECT_TRUE(open_subset(*r, interval(Rational(0), std::nullopt), interval(Rational(-1), std::nullopt)));
  EXPECT_FALSE(open_subset(*r, whole(), interval(Rational(-100), Rational(100))));
}

TEST(Intersect, IntervalAlgebra) {
  EXPECT_EQ(intersect(interval(Rational(0), Rational(3)), interval(Rational(1), Rational(4))),
            interval(Rational(1), Rational(3)));
  EXPECT_TRUE(intersect(interval(Rational(0), Rational(1)), interval(Rational(1), Rational(2))).is_empty());
  EXPECT_EQ(intersect(cylinder({0}), cylinder({0, 3})), cylinder({0, 3}));
  try {
    intersect(cylinder({0}), interval(Rational(0), Rational(1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotExpressible);
    EXPECT_NE(std::string(e.what()).find("[<0>]"), std::string::npos);
  }
}

TEST(Serialize, DescriptorTreesRoundTrip) {
  OpenDesc u = unite({rectangle({interval(Rational(-1, 2), std::nullopt), half_open(Rational(0), Rational(1))}),
                      inject(1, co_named({PointId::nat(2)})), whole(), cylinder({1, 2}), singleton(q("3/7"))});
  EXPECT_EQ(open_from_json(to_json(u)), u);
  SetDesc s = set_union({product({closed(0, 1), points({PointId::word({1})})}), inject(0, open_set(0, 1)),
                         points({PointId::infinity(), PointId::tuple({PointId::nat(1), q(2)})})});
  EXPECT_EQ(set_from_json(to_json(s)), s);
}

TEST(Cover, FromElementsSelectsLeastContainingIndex) {
  Cover c = Cover::from_elements("c", real(), CoverClass::K,
                                 {interval(Rational(0), Rational(1)), interval(Rational(-5), Rational(5)),
                                  interval(Rational(-9), Rational(9))});
  EXPECT_EQ(c.select(closed(1, 2)), 1u);
  EXPECT_EQ(c.select_checked(closed(-8, 0)), 2u);
  EXPECT_FALSE(c.select(closed(-10, 0)));
  EXPECT_FALSE(c.element(3));
}

TEST(Registry, EmptyDocumentGivesEmptyRegistry) {
  auto r = SpaceRegistry::parse_text(R"({"spaces": [], "version": 1})");
  EXPECT_EQ(r.size(), 0u);
}

TEST(Registry, CorruptJsonIsConfigError) {
  try {
    SpaceRegistry::parse_text("{\"spaces\": [");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Config);
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
  }
}

TEST(Registry, UnknownReferenceRejected) {
  EXPECT_THROW(SpaceRegistry::parse_text(
                   R"({"spaces": [{"id": "P", "kind": "Product", "params": {"factors": ["Nope"]}}], "version": 1})"),
               Error);
}
