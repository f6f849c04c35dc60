// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quartica/discriminant.hpp"
#include "quartica/kummer.hpp"
#include "quartica/quartic_curves.hpp"

using namespace quartica;

namespace {

int g_failures = 0;

void criterion(int n, const std::string& label, const std::function<bool(std::string&)>& body) {
  std::string note;
  bool ok = false;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  if (!ok) ++g_failures;
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << label << " ("
            << ms << " ms)";
  if (!note.empty()) std::cout << " -- " << note;
  std::cout << "\n";
}

FE rand_nonzero(const Field& f, SplitMix64& rng) {
  return FE::ffe(f, 1 + rng.below(f.ff().q() - 1));
}

FE rand_fe(const Field& f, SplitMix64& rng) { return FE::ffe(f, rng.below(f.ff().q())); }

// draws generic points/planes and demands exact witness agreement with the
// predicted component rays
bool table_case(const KummerSurface& k, unsigned draws, SplitMix64& rng, std::string& note,
                std::vector<PluckerLine>* ray_sink = nullptr) {
  for (unsigned i = 0; i < draws; ++i) {
    ProjPoint q = draw_generic_point(k, rng);
    auto sr = order_count(k.x, q);
    auto pred = predicted_through_point(k, q);
    std::set<PluckerLine> got(sr.witnesses.begin(), sr.witnesses.end());
    std::set<PluckerLine> want(pred.rays.begin(), pred.rays.end());
    if (sr.bitangents != k.expected.order || got != want) {
      note = "order mismatch at point " + q.str();
      return false;
    }
    if (ray_sink)
      ray_sink->insert(ray_sink->end(), sr.witnesses.begin(), sr.witnesses.end());
  }
  for (unsigned i = 0; i < draws; ++i) {
    ProjPlane u = draw_generic_plane(k, rng);
    auto sr = class_count(k.x, u);
    auto pred = predicted_in_plane(k, u);
    std::set<PluckerLine> got(sr.witnesses.begin(), sr.witnesses.end());
    std::set<PluckerLine> want(pred.rays.begin(), pred.rays.end());
    if (sr.bitangents != k.expected.cls || got != want) {
      note = "class mismatch in plane " + u.str();
      return false;
    }
    if (ray_sink)
      ray_sink->insert(ray_sink->end(), sr.witnesses.begin(), sr.witnesses.end());
  }
  return true;
}

}  // namespace

int main() {
  Field gf32 = Field::GF(2, 5);

  criterion(1, "ordinary family has bidegree (3,7) with exact witnesses", [&](std::string& note) {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 3; ++trial) {
      auto k = make_kummer(gf32, {KummerKind::Ordinary,
                                  {rand_nonzero(gf32, rng), rand_nonzero(gf32, rng),
                                   rand_nonzero(gf32, rng)}});
      if (!table_case(k, 20, rng, note)) return false;
    }
    return true;
  });

  criterion(2, "2-rank-1 family has bidegree (2,4) and the cone quadric relations",
            [&](std::string& note) {
    SplitMix64 rng(102);
    for (int trial = 0; trial < 3; ++trial) {
      auto k = make_kummer(
          gf32, {KummerKind::Rank1, {rand_fe(gf32, rng), rand_nonzero(gf32, rng)}});
      if (!table_case(k, 20, rng, note)) return false;
      auto cd = plucker_congruence(k.map("s2"), gf32);
      const auto& m = cd.reduced_minors;
      if (!m[1].is_zero() || !(m[2] - m[3]).is_zero() || !(m[0] * m[5] - m[2] * m[3]).is_zero()) {
        note = "cone quadric relation fails";
        return false;
      }
    }
    return true;
  });

  criterion(3, "supersingular family has bidegree (1,2); rays meet the axis",
            [&](std::string& note) {
    SplitMix64 rng(103);
    std::vector<FE> alphas{FE::zero(gf32), rand_fe(gf32, rng), rand_nonzero(gf32, rng)};
    for (const FE& alpha : alphas) {
      auto k = make_kummer(gf32, {KummerKind::Supersingular, {alpha}});
      std::vector<PluckerLine> rays;
      if (!table_case(k, 20, rng, note, &rays)) return false;
      auto cd = plucker_congruence(k.map("tss"), gf32);
      std::vector<MultiPoly> want{MultiPoly::zero(gf32, 4),
                                  MultiPoly::parse(gf32, 4, "x0^2"),
                                  MultiPoly::parse(gf32, 4, "x0*x1"),
                                  MultiPoly::parse(gf32, 4, "x0*x1"),
                                  MultiPoly::parse(gf32, 4, "x1^2"),
                                  MultiPoly::parse(gf32, 4, "x0*x3 + x1*x2")};
      if (cd.reduced_minors != want) {
        note = "reduced minors differ from the normal form";
        return false;
      }
      PluckerLine axis = PluckerLine::from_points(
          ProjPoint(gf32, {FE::zero(gf32), FE::zero(gf32), FE::one(gf32), FE::zero(gf32)}),
          ProjPoint(gf32, {FE::zero(gf32), FE::zero(gf32), FE::zero(gf32), FE::one(gf32)}));
      for (const auto& r : rays)
        if (!lines_meet(r, axis)) {
          note = "ray misses the axis: " + r.str();
          return false;
        }
    }
    return true;
  });

  criterion(4, "binary discriminant mod 2 is the square of a degree d-1 form",
            [&](std::string& note) {
    Field f = Field::GF(2, 4);
    SplitMix64 rng(104);
    for (unsigned d = 2; d <= 6; ++d) {
      MultiPoly disc = universal_discriminant(d, true);
      MultiPoly root = disc_sqrt_char2(d);
      if (!(root * root == disc) || root.total_degree() != static_cast<int>(d - 1)) {
        note = "identity fails at degree " + std::to_string(d);
        return false;
      }
      MultiPoly discf = disc.map_field(
          f, [&](const FE& a) { return a.is_zero() ? FE::zero(f) : FE::one(f); });
      MultiPoly rootf = root.map_field(
          f, [&](const FE& a) { return a.is_zero() ? FE::zero(f) : FE::one(f); });
      for (int i = 0; i < 1000; ++i) {
        Vec coeffs;
        for (unsigned t = 0; t <= d; ++t) coeffs.push_back(rand_fe(f, rng));
        FE dv = discf.eval(coeffs), rv = rootf.eval(coeffs);
        if (dv != rv * rv) {
          note = "sampled evaluation fails at degree " + std::to_string(d);
          return false;
        }
      }
    }
    return true;
  });

  criterion(5, "all seven self-maps pass preserve/involutive/bitangent checks",
            [&](std::string& note) {
    for (unsigned deg = 3; deg <= 6; ++deg) {
      Field f = Field::GF(2, deg);
      SplitMix64 rng(105 + deg);
      std::vector<KummerSurface> ks;
      ks.push_back(make_kummer(f, {KummerKind::Ordinary,
                                   {rand_nonzero(f, rng), rand_nonzero(f, rng),
                                    rand_nonzero(f, rng)}}));
      ks.push_back(
          make_kummer(f, {KummerKind::Rank1, {rand_fe(f, rng), rand_nonzero(f, rng)}}));
      ks.push_back(make_kummer(f, {KummerKind::Supersingular, {rand_fe(f, rng)}}));
      const std::set<std::string> seven{"t1", "t2", "t3", "s1", "s2", "tau", "tss"};
      unsigned seen = 0;
      for (const auto& k : ks)
        for (const auto& m : k.maps) {
          if (!seven.count(m.name)) continue;
          ++seen;
          auto pc = check_preserves(k.x, m);
          auto ic = check_involutive(m, f);
          auto bc = check_bitangent_involution(k.x, m, rng, 200);
          bool bit = (bc.symbolic_pass && bc.sampled_pass) == m.bitangent_claimed;
          if (!pc.preserves || !ic.involutive || !bit) {
            note = m.name + " fails over GF(2^" + std::to_string(deg) + ")";
            return false;
          }
        }
      if (seen != 7) {
        note = "expected seven maps, saw " + std::to_string(seen);
        return false;
      }
    }
    return true;
  });

  criterion(6, "fixed locus of the first involution is the common factor", [&](std::string& note) {
    Field f = Field::GF(2, 6);
    SplitMix64 rng(106);
    auto k = make_kummer(
        f, {KummerKind::Ordinary,
            {rand_nonzero(f, rng), rand_nonzero(f, rng), rand_nonzero(f, rng)}});
    const CremonaMap& t1 = k.map("t1");
    MultiPoly locus = plucker_congruence(t1, f).common_factor;
    unsigned used = 0;
    for (unsigned tries = 0; used < 200 && tries < 20000; ++tries) {
      auto p = random_surface_point(k.x, rng);
      if (!p) continue;
      Vec img;
      for (const auto& g : t1.images) img.push_back(g.eval(p->x));
      if (is_zero_vec(img)) continue;
      ++used;
      bool fixed = ProjPoint(f, img) == *p;
      bool on_locus = locus.eval(p->x).is_zero();
      if (fixed != on_locus) {
        note = "counterexample at " + p->str();
        return false;
      }
    }
    if (used < 200) {
      note = "only sampled " + std::to_string(used) + " points";
      return false;
    }
    return true;
  });

  criterion(7, "normal-form fixtures stabilize to counts 7/4/2/1 and ranks 3/2/1/0",
            [&](std::string& note) {
    const WallKind kinds[4] = {WallKind::I, WallKind::II, WallKind::III, WallKind::IV};
    const unsigned want_count[4] = {7, 4, 2, 1};
    const unsigned want_rank[4] = {3, 2, 1, 0};
    for (int i = 0; i < 4; ++i) {
      PlaneQuartic c = wall_fixture(kinds[i]);
      auto sc = plane_bitangent_count(c, 8);
      if (!sc.stabilized || sc.count != want_count[i] ||
          classify_2rank(sc.count) != want_rank[i]) {
        note = "kind " + wall_kind_name(kinds[i]) + " misclassified";
        return false;
      }
      Field flast = Field::GF(2, sc.ks.back());
      std::set<Vec> wits(sc.witnesses.begin(), sc.witnesses.end());
      for (const auto& a : listed_bitangents(kinds[i], flast))
        if (!wits.count(a)) {
          note = "kind " + wall_kind_name(kinds[i]) + " misses a listed line";
          return false;
        }
    }
    return true;
  });

  criterion(8, "inseparable centers: none for the families, one for the projection fixture",
            [&](std::string& note) {
    Field f = Field::GF(2, 3);
    SplitMix64 rng(108);
    std::vector<KummerSurface> ks;
    ks.push_back(make_kummer(f, {KummerKind::Ordinary,
                                 {rand_nonzero(f, rng), rand_nonzero(f, rng),
                                  rand_nonzero(f, rng)}}));
    ks.push_back(
        make_kummer(f, {KummerKind::Rank1, {rand_fe(f, rng), rand_nonzero(f, rng)}}));
    ks.push_back(make_kummer(f, {KummerKind::Supersingular, {rand_fe(f, rng)}}));
    for (const auto& k : ks)
      if (!inseparable_centers(k.x).empty()) {
        note = "unexpected center for " + kummer_kind_name(k.params.kind);
        return false;
      }
    Field gf2 = Field::GF(2, 1);
    auto centers = inseparable_centers(center_fixture(gf2, FE::one(gf2), FE::one(gf2)));
    Vec want{FE::zero(gf2), FE::zero(gf2), FE::zero(gf2), FE::one(gf2)};
    if (centers.size() != 1 || !(centers[0] == ProjPoint(gf2, want))) {
      note = "projection fixture center set is wrong";
      return false;
    }
    return true;
  });

  criterion(9, "reference bidegrees: (12,28), flexes (24,24), char-2 order bound 6",
            [&](std::string& note) {
    auto b = bitangent_bidegree_char0(4);
    auto fx = flex_bidegree_char0(4);
    unsigned bound = bitangent_order_bound_char2(4);
    if (b.order != 12 || b.cls != 28 || fx.order != 24 || fx.cls != 24 || bound != 6) {
      std::ostringstream os;
      os << "got (" << b.order << "," << b.cls << "), (" << fx.order << "," << fx.cls
         << "), " << bound;
      note = os.str();
      return false;
    }
    return true;
  });

  criterion(10, "plane sections stabilize to the surface class count 7/4/2",
            [&](std::string& note) {
    Field f = Field::GF(2, 2);
    SplitMix64 rng(110);
    std::vector<KummerSurface> ks;
    ks.push_back(make_kummer(
        f, {KummerKind::Ordinary, {FE::ffe(f, 1), FE::ffe(f, 2), FE::ffe(f, 3)}}));
    ks.push_back(make_kummer(f, {KummerKind::Rank1, {FE::ffe(f, 2), FE::ffe(f, 3)}}));
    ks.push_back(make_kummer(f, {KummerKind::Supersingular, {FE::ffe(f, 2)}}));
    for (const auto& k : ks) {
      unsigned done = 0, guard = 0;
      while (done < 2 && ++guard < 60) {
        ProjPlane u = draw_generic_plane(k, rng);
        PlaneQuartic section = plane_section(k.x, u);
        if (!curve_is_smooth(section, 2).smooth) continue;
        ++done;
        auto surf = class_count(k.x, u);
        auto sc = plane_bitangent_count(section, 12);
        if (!sc.stabilized || sc.count != surf.bitangents ||
            surf.bitangents != k.expected.cls) {
          note = kummer_kind_name(k.params.kind) + ": section count disagrees";
          return false;
        }
      }
      if (done < 2) {
        note = kummer_kind_name(k.params.kind) + ": no smooth sections found";
        return false;
      }
    }
    return true;
  });

  std::cout << (g_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(g_failures))
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
