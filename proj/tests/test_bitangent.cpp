#include "doctest.h"

#include "quartica/bitangent.hpp"

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

PluckerLine axis01(const Field& f) {
  return PluckerLine::from_points(pt(f, {1, 0, 0, 0}), pt(f, {0, 1, 0, 0}));
}

}  // namespace

TEST_CASE("surface construction validates the form") {
  Field Q = Field::QQ();
  CHECK_NOTHROW(QuarticSurface(MultiPoly::parse(Q, 4, "x0^4 + x1^4 + x2^4 + x3^4")));
  CHECK_THROWS(QuarticSurface(MultiPoly::parse(Q, 4, "x0^3 + x1^3")));
  CHECK_THROWS(QuarticSurface(MultiPoly::parse(Q, 4, "x0^4 + x1")));
  CHECK_THROWS(QuarticSurface(MultiPoly::parse(Q, 4, "0")));
  CHECK_THROWS(QuarticSurface(MultiPoly::parse(Q, 3, "x0^4")));
}

TEST_CASE("line classification covers every signature") {
  Field Q = Field::QQ();
  PluckerLine l = axis01(Q);
  auto classify = [&](const char* form) {
    return classify_line(QuarticSurface(MultiPoly::parse(Q, 4, form)), l);
  };
  // restrictions to the line x2 = x3 = 0 realize each multiplicity pattern
  CHECK(classify("x0^4 + x1^4 + x2^4 + x3^4") == LineType::Transversal);       // 1111
  CHECK(classify("x0^2*x1^2 + x0*x1^3 + x2^4 + x3^4") == LineType::SimpleTangent);  // 211
  CHECK(classify("x0^2*x1^2 + x2^4 + x3^4") == LineType::Bitangent);           // 22
  CHECK(classify("x0^3*x1 + x2^4 + x3^4") == LineType::FlexLine);              // 31
  CHECK(classify("x0^4 + x2^4 + x3^4") == LineType::Bitangent);                // 4
  PluckerLine inside = PluckerLine::from_points(pt(Q, {0, 1, 0, 0}), pt(Q, {0, 0, 1, 0}));
  QuarticSurface split(MultiPoly::parse(Q, 4, "x0^4 + x0*x1*x2*x3"));
  CHECK(classify_line(split, inside) == LineType::Contained);
  CHECK(signature_key(line_signature(split, inside)) == "contained");
  CHECK(signature_key(line_signature(
            QuarticSurface(MultiPoly::parse(Q, 4, "x0^2*x1^2 + x2^4 + x3^4")), l)) == "22");
}

TEST_CASE("every line is a bitangent of a doubled smooth quadric") {
  for (Field F : {Field::GF(3), Field::GF(2, 2)}) {
    MultiPoly q = MultiPoly::parse(F, 4, "x0*x1 + x2*x3");
    QuarticSurface x(q * q);
    uint64_t n = F.ff().q() * F.ff().q() + F.ff().q() + 1;
    ProjPoint p = pt(F, {1, 1, 1, 0});  // not on the quadric
    REQUIRE(!q.eval(p.x).is_zero());
    auto res = order_count(x, p);
    CHECK(res.lines_scanned == n);
    CHECK(res.bitangents == n);
    CHECK(res.witnesses.size() == n);
    CHECK(res.by_signature.count("contained") == 0);
    // a plane section: every line in it doubles up as well, except lines of
    // the quadric itself that happen to lie in the plane
    auto cres = class_count(x, pl(F, {1, 1, 1, 1}));
    CHECK(cres.lines_scanned == n);
    CHECK(cres.bitangents + (cres.by_signature.count("contained")
                                 ? cres.by_signature.at("contained")
                                 : 0) == n);
  }
}

TEST_CASE("lines on the surface are reported as contained") {
  Field F = Field::GF(3);
  MultiPoly q = MultiPoly::parse(F, 4, "x0*x1 + x2*x3");
  QuarticSurface x(q * q);
  PluckerLine on = PluckerLine::from_points(pt(F, {1, 0, 0, 0}), pt(F, {0, 0, 1, 0}));
  CHECK(classify_line(x, on) == LineType::Contained);
}

TEST_CASE("scan results are independent of the worker count") {
  Field F = Field::GF(2, 2);
  QuarticSurface x(MultiPoly::parse(F, 4,
                                    "x0^3*x1 + x1^3*x2 + x2^3*x3 + x3^3*x0 + x0*x1*x2*x3"));
  ProjPoint p = pt(F, {1, 0, 1, 1});
  auto a = order_count(x, p, 1);
  auto b = order_count(x, p, 3);
  auto c = order_count(x, p, 8);
  CHECK(a.bitangents == b.bitangents);
  CHECK(a.by_signature == b.by_signature);
  CHECK(a.witnesses == b.witnesses);
  CHECK(a.bitangents == c.bitangents);
  CHECK(a.witnesses == c.witnesses);
}

TEST_CASE("inseparable centers") {
  Field F = Field::GF(2);
  // independent partials leave no center
  QuarticSurface fermat_like(
      MultiPoly::parse(F, 4, "x0^3*x1 + x1^3*x2 + x2^3*x3 + x3^3*x0"));
  CHECK(inseparable_centers(fermat_like).empty());
  // one partial vanishes identically: a unique center
  QuarticSurface one(MultiPoly::parse(F, 4, "x3^2*x2^2 + x0*x1^3 + x0^3*x2"));
  auto centers = inseparable_centers(one);
  REQUIRE(centers.size() == 1);
  CHECK(centers[0] == pt(F, {0, 0, 0, 1}));
  // all partials vanish identically: the whole space
  QuarticSurface all(MultiPoly::parse(F, 4, "x0^4 + x1^4 + x2^4 + x3^4"));
  CHECK(inseparable_centers(all).size() == 15);
  Field Q = Field::QQ();
  QuarticSurface fermat(MultiPoly::parse(Q, 4, "x0^4 + x1^4 + x2^4 + x3^4"));
  CHECK(inseparable_centers(fermat).empty());
}

TEST_CASE("trope detection on a doubled quadric") {
  Field F = Field::GF(2, 2);
  MultiPoly q = MultiPoly::parse(F, 4, "x0*x1 + x2*x3");
  QuarticSurface x(q * q);
  SplitMix64 rng(64);
  int found = 0;
  for (int i = 0; i < 10; ++i) {
    ProjPlane u = random_plane(F, rng);
    auto conic = trope_conic(x, u);
    REQUIRE(conic.has_value());
    ++found;
    MultiPoly lin(F, 4);
    for (unsigned j = 0; j < 4; ++j) lin.add_term(Mono{j == 0, j == 1, j == 2, j == 3}, u.a[j]);
    MultiPoly diff = x.f - (*conic) * (*conic);
    if (diff.is_zero()) continue;
    CHECK(diff.divide_exact(lin).has_value());
  }
  CHECK(found == 10);
  Field Q = Field::QQ();
  QuarticSurface fermat(MultiPoly::parse(Q, 4, "x0^4 + x1^4 + x2^4 + x3^4"));
  CHECK(!trope_conic(fermat, pl(Q, {0, 0, 0, 1})).has_value());
}

TEST_CASE("classical bidegrees") {
  CHECK(bitangent_bidegree_char0(4).order == 12);
  CHECK(bitangent_bidegree_char0(4).cls == 28);
  CHECK(flex_bidegree_char0(4).order == 24);
  CHECK(flex_bidegree_char0(4).cls == 24);
  CHECK(bitangent_order_bound_char2(4) == 6);
}

TEST_CASE("surface point sampling") {
  Field F = Field::GF(2, 2);
  QuarticSurface x(MultiPoly::parse(F, 4, "x0^3*x1 + x1^3*x2 + x2^3*x3 + x3^3*x0"));
  SplitMix64 a(5), b(5);
  for (int i = 0; i < 20; ++i) {
    auto p = random_surface_point(x, a);
    auto q = random_surface_point(x, b);
    REQUIRE(p.has_value());
    CHECK(x.f.eval(p->x).is_zero());
    CHECK(*p == *q);
  }
  // no rational points at all: x0^4+...+x3^4 = 0 has none over GF(5)
  Field F5 = Field::GF(5);
  QuarticSurface none(MultiPoly::parse(F5, 4, "x0^4 + x1^4 + x2^4 + x3^4"));
  SplitMix64 c(1);
  CHECK(!random_surface_point(none, c, 32).has_value());
}
