#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quartica/poly.hpp"
#include "quartica/projgeom.hpp"

namespace quartica {

// a homogeneous quartic form in x0..x3 together with its ambient field
struct QuarticSurface {
  MultiPoly f;
  explicit QuarticSurface(MultiPoly form);
  const Field& field() const { return f.field(); }
};

// how a line meets the surface, read off the multiplicity signature of the
// restricted binary quartic: 1111, 211, 22, 31, 4, or identically zero
enum class LineType { Transversal, SimpleTangent, Bitangent, FlexLine, Contained };

std::vector<unsigned> line_signature(const QuarticSurface& x, const PluckerLine& l);
LineType classify_line(const QuarticSurface& x, const PluckerLine& l);
std::string signature_key(const std::vector<unsigned>& sig);  // "22", "1111", "contained"
LineType type_from_signature(const std::vector<unsigned>& sig);

// full scan of the q^2+q+1 lines through a point (order) or in a plane
// (class); bitangents are the lines whose signature is 22 or 4
struct ScanResult {
  uint64_t lines_scanned = 0;
  uint64_t bitangents = 0;
  std::map<std::string, uint64_t> by_signature;
  std::vector<PluckerLine> witnesses;  // the bitangent lines, in scan order
};
ScanResult order_count(const QuarticSurface& x, const ProjPoint& q, unsigned workers = 1);
ScanResult class_count(const QuarticSurface& x, const ProjPlane& u, unsigned workers = 1);

// points c with sum_i c_i dF/dx_i identically zero; every line through such a
// point meets the surface with even multiplicities everywhere
std::vector<ProjPoint> inseparable_centers(const QuarticSurface& x);

// a plane where the surface restricts to a doubled conic; returns a quadric
// form q in the ambient coordinates with f - q^2 divisible by the plane form
std::optional<MultiPoly> trope_conic(const QuarticSurface& x, const ProjPlane& u);

// classical reference values for congruences of a general degree-d surface
struct Bidegree {
  unsigned order;
  unsigned cls;
};
Bidegree bitangent_bidegree_char0(unsigned d);  // (12, 28) at d = 4
Bidegree flex_bidegree_char0(unsigned d);       // (24, 24) at d = 4
unsigned bitangent_order_bound_char2(unsigned d);  // 6 at d = 4

// a point of the surface found by scanning random lines for roots; nullopt
// if `tries` lines yield none
std::optional<ProjPoint> random_surface_point(const QuarticSurface& x, SplitMix64& rng,
                                              unsigned tries = 64);

}  // namespace quartica
