#include "doctest.h"

#include <set>

#include "quartica/projgeom.hpp"

using namespace quartica;

namespace {

ProjPoint pt(const Field& f, std::initializer_list<long long> cs) {
  Vec v;
  for (auto c : cs) v.push_back(FE::of_int(f, c));
  return ProjPoint(f, v);
}

ProjPlane pl(const Field& f, std::initializer_list<long long> cs) {
  Vec v;
  for (auto c : cs) v.push_back(FE::of_int(f, c));
  return ProjPlane(f, v);
}

}  // namespace

TEST_CASE("lines from points and their span") {
  Field F = Field::GF(7);
  ProjPoint e0 = pt(F, {1, 0, 0, 0});
  ProjPoint e1 = pt(F, {0, 1, 0, 0});
  PluckerLine l = PluckerLine::from_points(e0, e1);
  Vec want{FE::one(F), FE::zero(F), FE::zero(F), FE::zero(F), FE::zero(F), FE::zero(F)};
  CHECK(l.p == want);
  CHECK(l.plucker_form().is_zero());
  CHECK(l.contains(e0));
  CHECK(l.contains(e1));
  CHECK(l.contains(pt(F, {2, 5, 0, 0})));
  CHECK_FALSE(l.contains(pt(F, {0, 0, 1, 0})));
  CHECK(l.in_plane(pl(F, {0, 0, 1, 0})));
  CHECK(l.in_plane(pl(F, {0, 0, 1, 5})));
  CHECK_FALSE(l.in_plane(pl(F, {1, 0, 0, 0})));

  SplitMix64 rng(3);
  for (int i = 0; i < 40; ++i) {
    ProjPoint a = random_point(F, 3, rng);
    ProjPoint b = random_point(F, 3, rng);
    if (a == b) continue;
    PluckerLine m = PluckerLine::from_points(a, b);
    CHECK(m.plucker_form().is_zero());
    CHECK(m.contains(a));
    CHECK(m.contains(b));
    auto [c, d] = m.span_points();
    CHECK(PluckerLine::from_points(c, d) == m);
  }
}

TEST_CASE("invalid Plucker tuples are rejected") {
  Field F = Field::GF(7);
  Vec bad{FE::one(F), FE::zero(F), FE::zero(F), FE::zero(F), FE::zero(F), FE::one(F)};
  CHECK_THROWS(PluckerLine(F, bad));
  CHECK_THROWS(PluckerLine::from_points(pt(F, {1, 2, 3, 4}), pt(F, {2, 4, 6, 8})));
}

TEST_CASE("lines from planes") {
  Field F = Field::GF(5);
  PluckerLine l = PluckerLine::from_planes(pl(F, {0, 0, 1, 0}), pl(F, {0, 0, 0, 1}));
  CHECK(l == PluckerLine::from_points(pt(F, {1, 0, 0, 0}), pt(F, {0, 1, 0, 0})));
  SplitMix64 rng(11);
  for (int i = 0; i < 30; ++i) {
    ProjPlane u = random_plane(F, rng);
    ProjPlane v = random_plane(F, rng);
    if (u == v) continue;
    PluckerLine m = PluckerLine::from_planes(u, v);
    CHECK(m.in_plane(u));
    CHECK(m.in_plane(v));
  }
}

TEST_CASE("pairing detects intersecting lines") {
  Field F = Field::GF(3);
  SplitMix64 rng(23);
  int met = 0, missed = 0;
  for (int i = 0; i < 60; ++i) {
    ProjPoint a = random_point(F, 3, rng), b = random_point(F, 3, rng);
    ProjPoint c = random_point(F, 3, rng), d = random_point(F, 3, rng);
    if (a == b || c == d) continue;
    PluckerLine l = PluckerLine::from_points(a, b);
    PluckerLine m = PluckerLine::from_points(c, d);
    bool meet_by_det = det({a.x, b.x, c.x, d.x}).is_zero();
    CHECK(lines_meet(l, m) == meet_by_det);
    (meet_by_det ? met : missed)++;
  }
  CHECK(met > 0);
  CHECK(missed > 0);
  // a line meets itself
  PluckerLine l = PluckerLine::from_points(pt(F, {1, 0, 0, 0}), pt(F, {0, 1, 1, 0}));
  CHECK(lines_meet(l, l));
}

TEST_CASE("planes through lines and plane-line intersections") {
  Field F = Field::GF(7);
  SplitMix64 rng(29);
  for (int i = 0; i < 40; ++i) {
    ProjPoint a = random_point(F, 3, rng), b = random_point(F, 3, rng);
    ProjPoint q = random_point(F, 3, rng);
    if (a == b) continue;
    PluckerLine l = PluckerLine::from_points(a, b);
    if (l.contains(q)) continue;
    ProjPlane u = plane_through(l, q);
    CHECK(l.in_plane(u));
    CHECK(u.contains(q));
    ProjPlane v = random_plane(F, rng);
    if (l.in_plane(v)) continue;
    auto m = plane_line_meet(v, l);
    REQUIRE(m.has_value());
    CHECK(l.contains(*m));
    CHECK(v.contains(*m));
  }
  PluckerLine l = PluckerLine::from_points(pt(F, {1, 0, 0, 0}), pt(F, {0, 1, 0, 0}));
  CHECK(!plane_line_meet(pl(F, {0, 0, 1, 0}), l).has_value());
  CHECK_THROWS(plane_through(l, pt(F, {1, 1, 0, 0})));
}

TEST_CASE("transversals through a point") {
  for (Field F : {Field::QQ(), Field::GF(2), Field::GF(2, 2)}) {
    PluckerLine l1 = PluckerLine::from_points(pt(F, {1, 0, 0, 0}), pt(F, {0, 1, 0, 0}));
    PluckerLine l2 = PluckerLine::from_points(pt(F, {0, 0, 1, 0}), pt(F, {0, 0, 0, 1}));
    CHECK_FALSE(lines_meet(l1, l2));
    ProjPoint q = pt(F, {1, 1, 1, 1});
    auto t = transversal_through_point(l1, l2, q);
    REQUIRE(t.has_value());
    CHECK(t->line.contains(q));
    CHECK(l1.contains(t->on_first));
    CHECK(l2.contains(t->on_second));
    CHECK(t->on_first == pt(F, {1, 1, 0, 0}));
    CHECK(t->on_second == pt(F, {0, 0, 1, 1}));
    // a point on one of the lines has no transversal
    CHECK(!transversal_through_point(l1, l2, pt(F, {1, 2, 0, 0})).has_value());
  }
}

TEST_CASE("transversals inside a plane") {
  Field F = Field::QQ();
  PluckerLine l1 = PluckerLine::from_points(pt(F, {1, 0, 0, 0}), pt(F, {0, 1, 0, 0}));
  PluckerLine l2 = PluckerLine::from_points(pt(F, {0, 0, 1, 0}), pt(F, {0, 0, 0, 1}));
  ProjPlane u = pl(F, {1, 1, 1, 1});
  auto t = transversal_in_plane(l1, l2, u);
  REQUIRE(t.has_value());
  CHECK(t->line.in_plane(u));
  CHECK(l1.contains(t->on_first));
  CHECK(l2.contains(t->on_second));
  CHECK(t->on_first == pt(F, {1, -1, 0, 0}));
  CHECK(t->on_second == pt(F, {0, 0, 1, -1}));
  // degenerate: the plane contains l1
  CHECK(!transversal_in_plane(l1, l2, pl(F, {0, 0, 1, 0})).has_value());
}

TEST_CASE("point enumeration is complete and duplicate-free") {
  struct Case {
    uint64_t p;
    unsigned k, dim;
    size_t want;
  };
  for (auto c : {Case{2, 1, 3, 15}, Case{3, 1, 2, 13}, Case{2, 2, 1, 5}, Case{2, 2, 2, 21}}) {
    Field F = Field::GF(c.p, c.k);
    auto pts = enum_points(F, c.dim);
    CHECK(pts.size() == c.want);
    std::set<ProjPoint> uniq(pts.begin(), pts.end());
    CHECK(uniq.size() == c.want);
    for (const auto& x : pts) {
      size_t lead = 0;
      while (x.x[lead].is_zero()) ++lead;
      CHECK(x.x[lead].is_one());
    }
  }
  CHECK(enum_points_p1(Field::GF(2, 2)).size() == 5);
}

TEST_CASE("line pencils through a point and inside a plane") {
  Field F = Field::GF(3);
  ProjPoint q = pt(F, {1, 2, 0, 1});
  auto through = enum_lines_through(q);
  CHECK(through.size() == 13);
  std::set<PluckerLine> uniq(through.begin(), through.end());
  CHECK(uniq.size() == 13);
  for (const auto& l : through) CHECK(l.contains(q));

  ProjPlane u = pl(F, {1, 0, 2, 1});
  auto inside = enum_lines_in(u);
  CHECK(inside.size() == 13);
  std::set<PluckerLine> uniq2(inside.begin(), inside.end());
  CHECK(uniq2.size() == 13);
  for (const auto& l : inside) CHECK(l.in_plane(u));

  // over GF(2): 7 lines through each of the 15 points, 35 lines in all
  Field F2 = Field::GF(2);
  std::set<PluckerLine> all;
  for (const auto& x : enum_points(F2, 3)) {
    auto ls = enum_lines_through(x);
    CHECK(ls.size() == 7);
    all.insert(ls.begin(), ls.end());
  }
  CHECK(all.size() == 35);
}

TEST_CASE("alpha and beta plane bases span the line pencils") {
  Field F = Field::GF(3);
  ProjPoint q = pt(F, {1, 2, 0, 1});
  auto basis = alpha_plane_basis(q);
  REQUIRE(basis.size() == 3);
  std::vector<Vec> rows{basis[0].p, basis[1].p, basis[2].p};
  CHECK(rank_of(rows) == 3);
  for (const auto& l : enum_lines_through(q)) {
    auto ext = rows;
    ext.push_back(l.p);
    CHECK(rank_of(ext) == 3);
  }

  ProjPlane u = pl(F, {1, 0, 2, 1});
  auto bbasis = beta_plane_basis(u);
  REQUIRE(bbasis.size() == 3);
  std::vector<Vec> brows{bbasis[0].p, bbasis[1].p, bbasis[2].p};
  CHECK(rank_of(brows) == 3);
  for (const auto& l : enum_lines_in(u)) {
    auto ext = brows;
    ext.push_back(l.p);
    CHECK(rank_of(ext) == 3);
  }
}

TEST_CASE("random sampling is deterministic per seed") {
  Field F = Field::GF(2, 3);
  SplitMix64 a(99), b(99);
  for (int i = 0; i < 10; ++i) {
    CHECK(random_point(F, 3, a) == random_point(F, 3, b));
  }
}
