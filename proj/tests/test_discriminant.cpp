#include "doctest.h"

#include <vector>

#include "quartica/discriminant.hpp"
#include "quartica/poly.hpp"
#include "quartica/rng.hpp"

using namespace quartica;

namespace {

// coefficients a0..ad of the monic polynomial with the given roots
std::vector<FE> coeffs_from_roots(const Field& f, const std::vector<long long>& roots) {
  std::vector<FE> c{FE::one(f)};
  for (long long r : roots) {
    std::vector<FE> nc(c.size() + 1, FE::zero(f));
    for (size_t i = 0; i < c.size(); ++i) {
      nc[i] += c[i];
      nc[i + 1] -= c[i] * FE::of_int(f, r);
    }
    c = nc;
  }
  return c;
}

}  // namespace

TEST_CASE("low-degree discriminants are the classical formulas") {
  Field Q = Field::QQ();
  CHECK(universal_discriminant(2, false) == MultiPoly::parse(Q, 3, "x1^2 + -4*x0*x2"));
  CHECK(universal_discriminant(3, false) ==
        MultiPoly::parse(Q, 4,
                         "x1^2*x2^2 + -4*x0*x2^3 + -4*x1^3*x3 + 18*x0*x1*x2*x3 + "
                         "-27*x0^2*x3^2"));
}

TEST_CASE("discriminant vanishes exactly on repeated roots") {
  Field Q = Field::QQ();
  for (unsigned d = 2; d <= 6; ++d) {
    MultiPoly D = universal_discriminant(d, false);
    std::vector<long long> distinct{1, -2, 3, 5, -7, 11};
    distinct.resize(d);
    CHECK_FALSE(D.eval(coeffs_from_roots(Q, distinct)).is_zero());
    std::vector<long long> repeated = distinct;
    repeated[d - 1] = repeated[0];
    CHECK(D.eval(coeffs_from_roots(Q, repeated)).is_zero());
  }
}

TEST_CASE("discriminant of a monic polynomial is the product of squared root gaps") {
  Field Q = Field::QQ();
  SplitMix64 rng(2024);
  for (unsigned d = 2; d <= 6; ++d) {
    MultiPoly D = universal_discriminant(d, false);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<long long> roots;
      for (unsigned i = 0; i < d; ++i)
        roots.push_back(static_cast<long long>(rng.below(41)) - 20);
      FE want = FE::one(Q);
      for (unsigned i = 0; i < d; ++i)
        for (unsigned j = i + 1; j < d; ++j) {
          FE gap = FE::of_int(Q, roots[i] - roots[j]);
          want = want * gap * gap;
        }
      CHECK(D.eval(coeffs_from_roots(Q, roots)) == want);
    }
  }
}

TEST_CASE("trinomial discriminant values") {
  Field Q = Field::QQ();
  // x^d + x + 1: (-1)^(d(d-1)/2) (d^d + (-1)^(d-1) (d-1)^(d-1))
  auto at = [&](unsigned d) {
    std::vector<FE> c(d + 1, FE::zero(Q));
    c[0] = FE::one(Q);
    c[d - 1] = FE::one(Q);
    c[d] = FE::one(Q);
    return universal_discriminant(d, false).eval(c);
  };
  CHECK(at(2) == FE::of_int(Q, -3));
  CHECK(at(3) == FE::of_int(Q, -31));       // -4 - 27
  CHECK(at(4) == FE::of_int(Q, 229));       // 256 - 27
  CHECK(at(5) == FE::of_int(Q, 3381));      // 3125 + 256
  CHECK(at(6) == FE::of_int(Q, -43531));    // 3125 - 46656
}

TEST_CASE("weighted homogeneity") {
  for (unsigned d = 2; d <= 6; ++d) {
    MultiPoly D = universal_discriminant(d, false);
    int deg = 0;
    CHECK(D.is_homogeneous(&deg));
    CHECK(deg == static_cast<int>(2 * (d - 1)));
    for (auto& [m, c] : D.terms()) {
      unsigned w = 0;
      for (unsigned i = 0; i <= d; ++i) w += i * m[i];
      CHECK(w == d * (d - 1));
    }
  }
}

TEST_CASE("mod-2 discriminant is a perfect square") {
  Field F2 = Field::GF(2);
  for (unsigned d = 2; d <= 6; ++d) {
    MultiPoly D2 = universal_discriminant(d, true);
    MultiPoly P = disc_sqrt_char2(d);
    CHECK(P * P == D2);
    CHECK(P.total_degree() == static_cast<int>(d - 1));
    CHECK(P.field() == F2);
  }
  CHECK(disc_sqrt_char2(3) == MultiPoly::parse(F2, 4, "x1*x2 + x0*x3"));
}

TEST_CASE("mod-2 discriminant agrees with resultants over GF(8)") {
  Field F = Field::GF(2, 3);
  Field F2 = Field::GF(2);
  SplitMix64 rng(31);
  for (unsigned d = 4; d <= 5; ++d) {
    MultiPoly D2 = universal_discriminant(d, true);
    MultiPoly Dlift = D2.map_field(F, [&](const FE& c) {
      return c.is_zero() ? FE::zero(F) : FE::one(F);
    });
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<FE> a;
      for (unsigned i = 0; i <= d; ++i) a.push_back(FE::ffe(F, rng.below(8)));
      if (a[0].is_zero()) a[0] = FE::one(F);
      BinaryForm f(F, a);
      std::vector<FE> da;
      for (unsigned j = 0; j < d; ++j) da.push_back(a[j] * FE::of_int(F, d - j));
      BinaryForm df(F, da);
      FE res = resultant(f, df);
      CHECK(Dlift.eval(a) == res / a[0]);
    }
  }
}
