#include "quartica/projgeom.hpp"

#include <sstream>
#include <stdexcept>

namespace quartica {

bool is_zero_vec(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

Vec normalize_proj(Vec v) {
  for (const auto& c : v) {
    if (c.is_zero()) continue;
    FE s = c.inv();
    for (auto& e : v) e = e * s;
    return v;
  }
  throw std::invalid_argument("normalize_proj: zero vector");
}

FE dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  FE s = FE::zero(a[0].field());
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Vec> row_reduce(std::vector<Vec> rows) {
  if (rows.empty()) return rows;
  size_t ncols = rows[0].size();
  size_t r = 0;
  for (size_t col = 0; col < ncols && r < rows.size(); ++col) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    FE s = rows[r][col].inv();
    for (auto& e : rows[r]) e = e * s;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      FE f = rows[i][col];
      for (size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r, Vec{});
  return rows;
}

unsigned rank_of(const std::vector<Vec>& rows) {
  return static_cast<unsigned>(row_reduce(rows).size());
}

std::vector<Vec> nullspace(const std::vector<Vec>& rows, unsigned ncols, const Field& f) {
  std::vector<Vec> red = row_reduce(rows);
  std::vector<int> pivot_of_col(ncols, -1);
  for (size_t i = 0; i < red.size(); ++i)
    for (unsigned j = 0; j < ncols; ++j)
      if (!red[i][j].is_zero()) {
        pivot_of_col[j] = static_cast<int>(i);
        break;
      }
  std::vector<Vec> basis;
  for (unsigned free = 0; free < ncols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    Vec v(ncols, FE::zero(f));
    v[free] = FE::one(f);
    for (unsigned j = 0; j < ncols; ++j)
      if (pivot_of_col[j] >= 0) v[j] = -red[pivot_of_col[j]][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

FE det(std::vector<Vec> m) {
  size_t n = m.size();
  const Field& f = m[0][0].field();
  FE d = FE::one(f);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return FE::zero(f);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      d = -d;
    }
    d = d * m[col][col];
    FE s = m[col][col].inv();
    for (size_t i = col + 1; i < n; ++i) {
      if (m[i][col].is_zero()) continue;
      FE fac = m[i][col] * s;
      for (size_t j = col; j < n; ++j) m[i][j] -= fac * m[col][j];
    }
  }
  return d;
}

namespace {

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].str();
  }
  os << ")";
  return os.str();
}

}  // namespace

ProjPoint::ProjPoint(Field f, Vec coords) : x(normalize_proj(std::move(coords))) {
  for (const auto& c : x)
    if (c.field() != f) throw std::invalid_argument("ProjPoint: field mismatch");
}

std::string ProjPoint::str() const { return vec_str(x); }

ProjPlane::ProjPlane(Field f, Vec coeffs) : a(normalize_proj(std::move(coeffs))) {
  for (const auto& c : a)
    if (c.field() != f) throw std::invalid_argument("ProjPlane: field mismatch");
}

std::string ProjPlane::str() const { return vec_str(a); }

PluckerLine::PluckerLine(Field f, Vec plucker) : p(normalize_proj(std::move(plucker))) {
  if (p.size() != 6) throw std::invalid_argument("PluckerLine: need 6 coordinates");
  for (const auto& c : p)
    if (c.field() != f) throw std::invalid_argument("PluckerLine: field mismatch");
  if (!plucker_form().is_zero())
    throw std::invalid_argument("PluckerLine: coordinates violate the Plucker relation");
}

PluckerLine PluckerLine::from_points(const ProjPoint& a, const ProjPoint& b) {
  const Vec& u = a.x;
  const Vec& v = b.x;
  if (u.size() != 4 || v.size() != 4)
    throw std::invalid_argument("from_points: points must lie in P^3");
  Vec p;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) p.push_back(u[i] * v[j] - u[j] * v[i]);
  if (is_zero_vec(p)) throw std::invalid_argument("from_points: points coincide");
  return PluckerLine(a.field(), std::move(p));
}

PluckerLine PluckerLine::from_planes(const ProjPlane& u, const ProjPlane& v) {
  auto pts = nullspace({u.a, v.a}, 4, u.field());
  if (pts.size() != 2) throw std::invalid_argument("from_planes: planes coincide");
  return from_points(ProjPoint(u.field(), pts[0]), ProjPoint(u.field(), pts[1]));
}

FE PluckerLine::plucker_form() const {
  return p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
}

std::pair<ProjPoint, ProjPoint> PluckerLine::span_points() const {
  const Field& f = field();
  // antisymmetric matrix P with P[i][j] = p_ij; its column space is the line
  FE z = FE::zero(f);
  std::vector<Vec> m{{z, p[0], p[1], p[2]},
                     {-p[0], z, p[3], p[4]},
                     {-p[1], -p[3], z, p[5]},
                     {-p[2], -p[4], -p[5], z}};
  int first = -1;
  for (int c = 0; c < 4 && first < 0; ++c) {
    Vec col{m[0][c], m[1][c], m[2][c], m[3][c]};
    if (!is_zero_vec(col)) first = c;
  }
  Vec a{m[0][first], m[1][first], m[2][first], m[3][first]};
  for (int c = first + 1; c < 4; ++c) {
    Vec b{m[0][c], m[1][c], m[2][c], m[3][c]};
    if (is_zero_vec(b)) continue;
    if (rank_of({a, b}) == 2)
      return {ProjPoint(f, a), ProjPoint(f, b)};
  }
  throw std::logic_error("span_points: Plucker matrix has rank < 2");
}

bool PluckerLine::contains(const ProjPoint& q) const {
  auto [a, b] = span_points();
  return rank_of({a.x, b.x, q.x}) == 2;
}

bool PluckerLine::in_plane(const ProjPlane& u) const {
  auto [a, b] = span_points();
  return u.contains(a) && u.contains(b);
}

std::string PluckerLine::str() const { return vec_str(p); }

FE plucker_pairing(const PluckerLine& l, const PluckerLine& m) {
  const Vec& a = l.p;
  const Vec& b = m.p;
  return a[0] * b[5] - a[1] * b[4] + a[2] * b[3] + a[3] * b[2] - a[4] * b[1] + a[5] * b[0];
}

bool lines_meet(const PluckerLine& l, const PluckerLine& m) {
  return plucker_pairing(l, m).is_zero();
}

ProjPlane plane_through(const PluckerLine& l, const ProjPoint& q) {
  if (l.contains(q)) throw std::invalid_argument("plane_through: point lies on the line");
  auto [a, b] = l.span_points();
  auto ns = nullspace({a.x, b.x, q.x}, 4, l.field());
  if (ns.size() != 1) throw std::logic_error("plane_through: degenerate span");
  return ProjPlane(l.field(), ns[0]);
}

std::optional<ProjPoint> plane_line_meet(const ProjPlane& u, const PluckerLine& l) {
  const Vec& p = l.p;
  const Vec& w = u.a;
  const Field& f = l.field();
  FE z = FE::zero(f);
  std::vector<Vec> m{{z, p[0], p[1], p[2]},
                     {-p[0], z, p[3], p[4]},
                     {-p[1], -p[3], z, p[5]},
                     {-p[2], -p[4], -p[5], z}};
  Vec pt(4, z);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) pt[i] += m[i][j] * w[j];
  if (is_zero_vec(pt)) return std::nullopt;  // line lies in the plane
  return ProjPoint(f, pt);
}

std::optional<Transversal> transversal_through_point(const PluckerLine& l1,
                                                     const PluckerLine& l2,
                                                     const ProjPoint& q) {
  if (l1.contains(q) || l2.contains(q)) return std::nullopt;
  ProjPlane u1 = plane_through(l1, q);
  ProjPlane u2 = plane_through(l2, q);
  if (u1 == u2) return std::nullopt;  // coplanar configuration: no unique transversal
  auto m1 = plane_line_meet(u2, l1);
  auto m2 = plane_line_meet(u1, l2);
  if (!m1 || !m2) return std::nullopt;
  if (*m1 == *m2) return std::nullopt;  // the lines meet; transversal degenerates
  PluckerLine t = PluckerLine::from_points(*m1, *m2);
  if (!t.contains(q)) return std::nullopt;
  return Transversal{t, *m1, *m2};
}

std::optional<Transversal> transversal_in_plane(const PluckerLine& l1, const PluckerLine& l2,
                                                const ProjPlane& u) {
  auto m1 = plane_line_meet(u, l1);
  auto m2 = plane_line_meet(u, l2);
  if (!m1 || !m2) return std::nullopt;  // a line lies in the plane
  if (*m1 == *m2) return std::nullopt;  // concurrent: no unique transversal
  return Transversal{PluckerLine::from_points(*m1, *m2), *m1, *m2};
}

std::vector<ProjPoint> enum_points(const Field& f, unsigned dim) {
  if (!f.is_finite()) throw std::invalid_argument("enum_points: needs a finite field");
  uint64_t q = f.ff().q();
  std::vector<ProjPoint> out;
  for (unsigned lead = 0; lead <= dim; ++lead) {
    unsigned tail = dim - lead;
    uint64_t count = 1;
    for (unsigned i = 0; i < tail; ++i) count *= q;
    for (uint64_t code = 0; code < count; ++code) {
      Vec v(dim + 1, FE::zero(f));
      v[lead] = FE::one(f);
      uint64_t c = code;
      for (unsigned i = dim; i > lead; --i) {
        v[i] = FE::ffe(f, c % q);
        c /= q;
      }
      out.emplace_back(f, std::move(v));
    }
  }
  return out;
}

std::vector<ProjPoint> enum_points_p1(const Field& f) { return enum_points(f, 1); }

std::vector<PluckerLine> enum_lines_through(const ProjPoint& q) {
  const Field& f = q.field();
  unsigned skip = 0;
  while (q.x[skip].is_zero()) ++skip;
  std::vector<PluckerLine> out;
  for (const auto& r2 : enum_points(f, 2)) {
    Vec r(4, FE::zero(f));
    unsigned idx = 0;
    for (unsigned i = 0; i < 4; ++i)
      if (i != skip) r[i] = r2.x[idx++];
    out.push_back(PluckerLine::from_points(q, ProjPoint(f, r)));
  }
  return out;
}

std::vector<PluckerLine> enum_lines_in(const ProjPlane& u) {
  const Field& f = u.field();
  auto span = nullspace({u.a}, 4, f);
  if (span.size() != 3) throw std::logic_error("enum_lines_in: bad plane");
  std::vector<PluckerLine> out;
  for (const auto& abc : enum_points(f, 2)) {
    auto sols = nullspace({abc.x}, 3, f);
    Vec pt1(4, FE::zero(f)), pt2(4, FE::zero(f));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 3; ++j) {
        pt1[i] += sols[0][j] * span[j][i];
        pt2[i] += sols[1][j] * span[j][i];
      }
    out.push_back(
        PluckerLine::from_points(ProjPoint(f, pt1), ProjPoint(f, pt2)));
  }
  return out;
}

std::vector<PluckerLine> alpha_plane_basis(const ProjPoint& q) {
  const Field& f = q.field();
  unsigned skip = 0;
  while (q.x[skip].is_zero()) ++skip;
  std::vector<PluckerLine> basis;
  for (unsigned i = 0; i < 4; ++i) {
    if (i == skip) continue;
    Vec e(4, FE::zero(f));
    e[i] = FE::one(f);
    basis.push_back(PluckerLine::from_points(q, ProjPoint(f, e)));
  }
  return basis;
}

std::vector<PluckerLine> beta_plane_basis(const ProjPlane& u) {
  const Field& f = u.field();
  auto span = nullspace({u.a}, 4, f);
  if (span.size() != 3) throw std::logic_error("beta_plane_basis: bad plane");
  std::vector<ProjPoint> pts;
  for (auto& v : span) pts.emplace_back(f, v);
  return {PluckerLine::from_points(pts[0], pts[1]),
          PluckerLine::from_points(pts[0], pts[2]),
          PluckerLine::from_points(pts[1], pts[2])};
}

ProjPoint random_point(const Field& f, unsigned dim, SplitMix64& rng) {
  for (;;) {
    Vec v;
    for (unsigned i = 0; i <= dim; ++i) {
      if (f.is_finite())
        v.push_back(FE::ffe(f, rng.below(f.ff().q())));
      else
        v.push_back(FE::of_int(f, static_cast<long long>(rng.below(19)) - 9));
    }
    if (!is_zero_vec(v)) return ProjPoint(f, std::move(v));
  }
}

ProjPlane random_plane(const Field& f, SplitMix64& rng) {
  ProjPoint p = random_point(f, 3, rng);
  return ProjPlane(f, p.x);
}

}  // namespace quartica
