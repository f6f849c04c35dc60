#pragma once
#include <optional>
#include <string>
#include <vector>

#include "quartica/field.hpp"
#include "quartica/rng.hpp"

namespace quartica {

using Vec = std::vector<FE>;

bool is_zero_vec(const Vec& v);
// scale so the first nonzero entry is 1; throws on the zero vector
Vec normalize_proj(Vec v);
FE dot(const Vec& a, const Vec& b);

// exact dense linear algebra over a Field
std::vector<Vec> row_reduce(std::vector<Vec> rows);           // RREF, zero rows dropped
unsigned rank_of(const std::vector<Vec>& rows);
std::vector<Vec> nullspace(const std::vector<Vec>& rows, unsigned ncols, const Field& f);
FE det(std::vector<Vec> m);

// point of P^3, stored with first nonzero coordinate 1
struct ProjPoint {
  Vec x;
  ProjPoint(Field f, Vec coords);
  const Field& field() const { return x[0].field(); }
  bool operator==(const ProjPoint& o) const { return x == o.x; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  bool operator<(const ProjPoint& o) const { return x < o.x; }
  std::string str() const;
};

// plane of P^3: coefficient vector of a linear form, first nonzero 1
struct ProjPlane {
  Vec a;
  ProjPlane(Field f, Vec coeffs);
  const Field& field() const { return a[0].field(); }
  bool operator==(const ProjPlane& o) const { return a == o.a; }
  bool operator!=(const ProjPlane& o) const { return !(*this == o); }
  bool operator<(const ProjPlane& o) const { return a < o.a; }
  bool contains(const ProjPoint& p) const { return dot(a, p.x).is_zero(); }
  std::string str() const;
};

// line of P^3 by Plucker coordinates (p01, p02, p03, p12, p13, p23),
// p_ij = a_i b_j - a_j b_i for spanning points a, b; first nonzero 1
struct PluckerLine {
  Vec p;
  PluckerLine(Field f, Vec plucker);  // validates the Plucker relation
  static PluckerLine from_points(const ProjPoint& a, const ProjPoint& b);
  static PluckerLine from_planes(const ProjPlane& u, const ProjPlane& v);
  const Field& field() const { return p[0].field(); }
  bool operator==(const PluckerLine& o) const { return p == o.p; }
  bool operator!=(const PluckerLine& o) const { return !(*this == o); }
  bool operator<(const PluckerLine& o) const { return p < o.p; }

  // p01 p23 - p02 p13 + p03 p12, zero for every actual line
  FE plucker_form() const;
  // two distinct points spanning the line
  std::pair<ProjPoint, ProjPoint> span_points() const;
  bool contains(const ProjPoint& q) const;
  bool in_plane(const ProjPlane& u) const;
  std::string str() const;
};

// polarized Plucker form; zero exactly when the lines meet (or coincide)
FE plucker_pairing(const PluckerLine& l, const PluckerLine& m);
bool lines_meet(const PluckerLine& l, const PluckerLine& m);

// the plane spanned by l and a point off l
ProjPlane plane_through(const PluckerLine& l, const ProjPoint& q);
// the point l ^ u; nullopt when l lies in u
std::optional<ProjPoint> plane_line_meet(const ProjPlane& u, const PluckerLine& l);

// unique transversal of two skew lines through a point on neither;
// nullopt in degenerate positions
struct Transversal {
  PluckerLine line;
  ProjPoint on_first;
  ProjPoint on_second;
};
std::optional<Transversal> transversal_through_point(const PluckerLine& l1,
                                                     const PluckerLine& l2,
                                                     const ProjPoint& q);
std::optional<Transversal> transversal_in_plane(const PluckerLine& l1, const PluckerLine& l2,
                                                const ProjPlane& u);

// deterministic enumerations over a finite field
std::vector<ProjPoint> enum_points_p1(const Field& f);   // q+1 scaling classes (s,t)
std::vector<ProjPoint> enum_points(const Field& f, unsigned dim);  // all of P^dim
std::vector<PluckerLine> enum_lines_through(const ProjPoint& q);   // q^2+q+1 lines
std::vector<PluckerLine> enum_lines_in(const ProjPlane& u);        // q^2+q+1 lines

// bases of the planes of the Plucker quadric: all lines through q, resp. in u,
// expressed as three lines whose projective span is that plane in P^5
std::vector<PluckerLine> alpha_plane_basis(const ProjPoint& q);
std::vector<PluckerLine> beta_plane_basis(const ProjPlane& u);

// uniform random projective data (rejection from the vector space)
ProjPoint random_point(const Field& f, unsigned dim, SplitMix64& rng);
ProjPlane random_plane(const Field& f, SplitMix64& rng);

}  // namespace quartica
