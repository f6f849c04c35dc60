#pragma once
#include <optional>
#include <string>
#include <vector>

#include "quartica/bitangent.hpp"

namespace quartica {

// canonical transport along the embedding into a larger GF(2^k)
FE embed_into(const FE& a, const Field& into);
Vec embed_vec(const Vec& v, const Field& into);
MultiPoly embed_poly(const MultiPoly& g, const Field& into);

// a plane quartic curve in characteristic 2; doubled conics are rejected
struct PlaneQuartic {
  MultiPoly c;  // homogeneous of degree 4 in 3 variables
  explicit PlaneQuartic(MultiPoly form);
  const Field& field() const { return c.field(); }
};

// the four normal forms of smooth plane quartics in characteristic 2,
// Q^2 + (cubic or quartic tail), with open conditions on the quadric Q
enum class WallKind { I, II, III, IV };
WallKind wall_kind_parse(const std::string& s);
std::string wall_kind_name(WallKind k);

// the exact quartic of the normal form; throws naming the violated
// evaluation, e.g. "Q(1,1,0) = 0"
PlaneQuartic wall_form(WallKind kind, const MultiPoly& q);

// the known bitangent lines of each normal form (7/4/2/1 of them), as
// normalized dual coefficient triples over f
std::vector<Vec> listed_bitangents(WallKind kind, const Field& f);

// a pinned admissible quadric per kind: the first Q, in coefficient
// enumeration order, passing the kind's constraints over GF(2), else GF(4)
PlaneQuartic wall_fixture(WallKind kind);

struct SmoothnessVerdict {
  bool smooth = true;
  unsigned depth = 0;                        // extensions scanned
  std::optional<ProjPoint> singular_point;   // witness when not smooth
  unsigned singular_k = 0;                   // GF(2^k) where it was found
};
// scans P^2(GF(2^(k m))), m = 1..depth, for common zeros of C and its
// partial derivatives
SmoothnessVerdict curve_is_smooth(const PlaneQuartic& c, unsigned depth);

// counts lines of P^2(GF(2^k)) whose restriction to C is a perfect square
// (or zero), walking k up the extension tower until the count sits still
// for three steps at a value in {7, 4, 2, 1}
struct StabilizedCount {
  std::vector<unsigned> ks;       // extension degrees scanned, in order
  std::vector<unsigned> counts;   // parallel counts
  bool stabilized = false;
  unsigned count = 0;             // the stabilized value
  unsigned stable_k = 0;          // first degree of the constant run
  std::vector<Vec> witnesses;     // dual triples over the last field scanned
};
StabilizedCount plane_bitangent_count(const PlaneQuartic& c, unsigned k_max,
                                      unsigned workers = 1);

// bitangent count over the closure -> 2-rank: 7/4/2/1 -> 3/2/1/0
unsigned classify_2rank(unsigned stabilized_count);

// the curve X cut by the plane u, in coordinates of u; throws when the
// section degenerates (e.g. u is a trope, giving a doubled conic)
PlaneQuartic plane_section(const QuarticSurface& x, const ProjPlane& u);

}  // namespace quartica
