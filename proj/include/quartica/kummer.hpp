#pragma once
#include <optional>
#include <string>
#include <vector>

#include "quartica/bitangent.hpp"

namespace quartica {

// the three quartic families with a doubled-conic (trope) geometry in
// characteristic 2, told apart by how many tropes and nodes survive
enum class KummerKind { Ordinary, Rank1, Supersingular };

KummerKind kummer_kind_parse(const std::string& s);
std::string kummer_kind_name(KummerKind k);

struct KummerParams {
  KummerKind kind;
  std::vector<FE> values;  // Ordinary {a,b,c}, Rank1 {alpha,beta}, Supersingular {alpha}
};

// a rational self-map given by its coordinate forms, plus what the structure
// theory claims about it
struct CremonaMap {
  std::string name;
  std::vector<MultiPoly> images;  // four forms of a common degree
  bool involution_claimed;        // composes to a multiple of the identity
  bool bitangent_claimed;         // generic orbit lines touch the surface evenly
};

// an irreducible piece of the bitangent line family: the Plucker quadric cut
// by two linear forms in (p01, p02, p03, p12, p13, p23)
struct ComponentSpec {
  std::string name;
  Vec l1, l2;
  bool cone;                          // the quadric piece has a vertex
  std::optional<PluckerLine> vertex;  // the vertex, which is itself a line of P^3
  std::string involution;             // name of the paired self-map
};

struct KummerSurface {
  KummerParams params;
  QuarticSurface x;
  std::vector<ProjPoint> nodes;
  std::vector<ProjPlane> tropes;
  std::vector<CremonaMap> maps;
  std::vector<ComponentSpec> components;
  Bidegree expected;  // (order, class) of the bitangent family

  const Field& field() const { return x.field(); }
  const CremonaMap& map(const std::string& name) const;
};

// builds the surface over a field of characteristic 2; validates parameter
// constraints (Ordinary: abc != 0, Rank1: beta != 0)
KummerSurface make_kummer(const Field& f, const KummerParams& p);

// brute-force singular points over the coefficient field itself: F and all
// partials vanish (build the surface over an extension to scan further out)
std::vector<ProjPoint> singular_points(const QuarticSurface& x);

struct TropeData {
  ProjPlane plane;
  MultiPoly conic;      // quadric with x.f - conic^2 divisible by the plane form
  bool conic_smooth;    // false when the conic splits into lines
};
std::vector<TropeData> trope_data(const KummerSurface& k);

// smoothness of a ternary conic in characteristic 2: the strange point
// (a12, a02, a01) must be nonzero and off the conic
bool conic_smooth_char2(const MultiPoly& q3);

// F o m == multiplier * F (multiplier nonzero)
struct PreserveCheck {
  bool preserves = false;
  MultiPoly multiplier;
};
PreserveCheck check_preserves(const QuarticSurface& x, const CremonaMap& m);

// m o m == multiplier * identity
struct InvolutiveCheck {
  bool involutive = false;
  MultiPoly multiplier;
};
InvolutiveCheck check_involutive(const CremonaMap& m, const Field& f);

// does the surface meet every generic orbit line q v m(q) with even
// multiplicities?  symbolic tier: the odd coefficients of F(s q + t m(q))
// must reduce to zero modulo F; sampled tier: restrict to orbit lines at
// random surface points and inspect the actual signatures
struct BitangentInvolutionCheck {
  bool symbolic_pass = false;
  bool sampled_pass = false;
  unsigned samples_used = 0;
  unsigned samples_skipped = 0;
};
BitangentInvolutionCheck check_bitangent_involution(const QuarticSurface& x, const CremonaMap& m,
                                                    SplitMix64& rng, unsigned samples = 50);

// the 2x2 minors p_ij = x_i m_j(x) - x_j m_i(x) of the orbit-line map,
// their visible common factor, and the exact linear relations among the
// reduced minors (a basis, from reduced row echelon form)
struct CongruenceData {
  std::vector<MultiPoly> raw_minors;      // order (01, 02, 03, 12, 13, 23)
  MultiPoly common_factor;                // 1 when none was found
  std::vector<MultiPoly> reduced_minors;  // raw = common_factor * reduced
  std::vector<Vec> linear_relations;      // c with sum_k c_k reduced[k] == 0
};
CongruenceData plucker_congruence(const CremonaMap& m, const Field& f);

// verdict for a polynomial relation in the six Plucker coordinates evaluated
// on the reduced minors: "identity" | "mod_surface" | "sampled:<n>" | "fails"
std::string relation_verdict(const MultiPoly& rel6, const CongruenceData& cd,
                             const QuarticSurface& x, SplitMix64& rng, unsigned samples = 50);

// the cubic form p01 p02 p12 + p01 p03 p13 + p02 p03 p23 + p12 p13 p23
MultiPoly inversion_cubic_relation(const Field& f);

// rays of the component pencil through a point / in a plane: the component's
// two linear forms restricted to the alpha (beta) plane give a 2x3 system
// whose kernel is the ray
struct PredictedRays {
  std::vector<std::string> names;     // parallel to rays
  std::vector<PluckerLine> rays;      // component rays, then trope rays
  bool degenerate = false;            // a solve had the wrong rank or rays collide
};
PredictedRays predicted_through_point(const KummerSurface& k, const ProjPoint& q);
PredictedRays predicted_in_plane(const KummerSurface& k, const ProjPlane& u);

// generic sampling: rejects points on the surface or on a trope plane and
// draws with degenerate predicted rays; rejects planes that are tropes,
// pass through a node, or have degenerate predicted rays
ProjPoint draw_generic_point(const KummerSurface& k, SplitMix64& rng,
                             unsigned max_redraws = 100);
ProjPlane draw_generic_plane(const KummerSurface& k, SplitMix64& rng,
                             unsigned max_redraws = 100);

// reference fixtures used by the regression suite
QuarticSurface rotation_fixture(const Field& f);     // x0^3 x1 + x1^3 x2 + x2^3 x3 + x3^3 x0
CremonaMap rotation_map(const Field& f);             // [x2, x3, x0, x1]
QuarticSurface center_fixture(const Field& f, const FE& a, const FE& b);
// w^2 (a x + b y + z)^2 + x (y^3 + x^2 z): unique inseparable center (0:0:0:1)

}  // namespace quartica
