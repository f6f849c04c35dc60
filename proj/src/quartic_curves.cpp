#include "quartica/quartic_curves.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace quartica {

FE embed_into(const FE& a, const Field& into) {
  if (a.field() == into) return a;
  return FE::ffe(into, FiniteField::embed(a.field().ff(), a.idx(), into.ff()));
}

Vec embed_vec(const Vec& v, const Field& into) {
  Vec out;
  for (const auto& a : v) out.push_back(embed_into(a, into));
  return out;
}

MultiPoly embed_poly(const MultiPoly& g, const Field& into) {
  return g.map_field(into, [&](const FE& a) { return embed_into(a, into); });
}

PlaneQuartic::PlaneQuartic(MultiPoly form) : c(std::move(form)) {
  if (c.nvars() != 3) throw std::invalid_argument("plane quartic: needs 3 variables");
  if (c.field().characteristic() != 2)
    throw std::invalid_argument("plane quartic: needs characteristic 2");
  int deg = 0;
  if (c.is_zero() || !c.is_homogeneous(&deg) || deg != 4)
    throw std::invalid_argument("plane quartic: needs a nonzero homogeneous quartic");
  if (c.sqrt())
    throw std::invalid_argument("plane quartic: doubled conics are rejected");
}

WallKind wall_kind_parse(const std::string& s) {
  if (s == "I") return WallKind::I;
  if (s == "II") return WallKind::II;
  if (s == "III") return WallKind::III;
  if (s == "IV") return WallKind::IV;
  throw std::invalid_argument("unknown normal form kind: " + s);
}

std::string wall_kind_name(WallKind k) {
  switch (k) {
    case WallKind::I: return "I";
    case WallKind::II: return "II";
    case WallKind::III: return "III";
    default: return "IV";
  }
}

namespace {

MultiPoly mono3(const Field& f, unsigned e0, unsigned e1, unsigned e2) {
  MultiPoly m(f, 3);
  m.add_term(Mono{static_cast<uint16_t>(e0), static_cast<uint16_t>(e1),
                  static_cast<uint16_t>(e2)},
             FE::one(f));
  return m;
}

MultiPoly wall_tail(WallKind kind, const Field& f) {
  switch (kind) {
    case WallKind::I:  // xyz(x+y+z)
      return mono3(f, 2, 1, 1) + mono3(f, 1, 2, 1) + mono3(f, 1, 1, 2);
    case WallKind::II:  // xyz(y+z)
      return mono3(f, 1, 2, 1) + mono3(f, 1, 1, 2);
    case WallKind::III:  // xy(y^2+xz)
      return mono3(f, 1, 3, 0) + mono3(f, 2, 1, 1);
    default:  // x(y^3+x^2 z)
      return mono3(f, 1, 3, 0) + mono3(f, 3, 0, 1);
  }
}

const std::vector<std::vector<int>>& constraint_points(WallKind kind) {
  static const std::vector<std::vector<int>> one{{0, 0, 1}};
  static const std::vector<std::vector<int>> two{{1, 0, 0}, {0, 0, 1}};
  static const std::vector<std::vector<int>> four{
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}};
  static const std::vector<std::vector<int>> seven{
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  switch (kind) {
    case WallKind::I: return seven;
    case WallKind::II: return four;
    case WallKind::III: return two;
    default: return one;
  }
}

bool admissible(WallKind kind, const MultiPoly& q, std::string* violated) {
  const Field& f = q.field();
  for (const auto& pt : constraint_points(kind)) {
    Vec v;
    for (int c : pt) v.push_back(c ? FE::one(f) : FE::zero(f));
    if (q.eval(v).is_zero()) {
      if (violated) {
        std::ostringstream os;
        os << "Q(" << pt[0] << "," << pt[1] << "," << pt[2] << ") = 0";
        *violated = os.str();
      }
      return false;
    }
  }
  return true;
}

const std::vector<Mono>& quadric_monos() {
  static const std::vector<Mono> ms{{2, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                    {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  return ms;
}

}  // namespace

PlaneQuartic wall_form(WallKind kind, const MultiPoly& q) {
  if (q.nvars() != 3) throw std::invalid_argument("wall_form: Q needs 3 variables");
  if (q.field().characteristic() != 2)
    throw std::invalid_argument("wall_form: needs characteristic 2");
  int deg = 0;
  if (q.is_zero() || !q.is_homogeneous(&deg) || deg != 2)
    throw std::invalid_argument("wall_form: Q must be a nonzero ternary quadric");
  std::string violated;
  if (!admissible(kind, q, &violated))
    throw std::invalid_argument("wall_form: " + violated);
  return PlaneQuartic(q * q + wall_tail(kind, q.field()));
}

std::vector<Vec> listed_bitangents(WallKind kind, const Field& f) {
  const FE o = FE::one(f), z = FE::zero(f);
  std::vector<Vec> all{{o, z, z}, {z, o, z}, {z, z, o}, {o, o, z},
                       {z, o, o}, {o, z, o}, {o, o, o}};
  switch (kind) {
    case WallKind::I: return all;
    case WallKind::II: return {all[0], all[1], all[2], all[4]};
    case WallKind::III: return {all[0], all[1]};
    default: return {all[0]};
  }
}

PlaneQuartic wall_fixture(WallKind kind) {
  for (unsigned deg : {1u, 2u}) {
    Field f = Field::GF(2, deg);
    uint64_t q = f.ff().q();
    uint64_t total = 1;
    for (int i = 0; i < 6; ++i) total *= q;
    for (uint64_t n = 0; n < total; ++n) {
      MultiPoly cand(f, 3);
      uint64_t rest = n;
      for (int i = 5; i >= 0; --i) {  // last monomial's coefficient runs fastest
        uint64_t d = rest % q;
        rest /= q;
        if (d) cand.add_term(quadric_monos()[i], FE::ffe(f, d));
      }
      if (cand.is_zero()) continue;
      if (admissible(kind, cand, nullptr)) return wall_form(kind, cand);
    }
  }
  throw std::logic_error("wall_fixture: no admissible quadric found");
}

SmoothnessVerdict curve_is_smooth(const PlaneQuartic& c, unsigned depth) {
  if (depth < 1) throw std::invalid_argument("curve_is_smooth: depth must be >= 1");
  const Field& f0 = c.field();
  if (!f0.is_finite()) throw std::invalid_argument("curve_is_smooth: needs a finite field");
  unsigned m = f0.ff().k();
  SmoothnessVerdict v;
  v.depth = depth;
  for (unsigned j = 1; j <= depth; ++j) {
    Field fk = (j == 1) ? f0 : Field::GF(2, m * j);
    MultiPoly ck = (j == 1) ? c.c : embed_poly(c.c, fk);
    std::vector<MultiPoly> partials;
    for (unsigned i = 0; i < 3; ++i) partials.push_back(ck.partial(i));
    for (const auto& p : enum_points(fk, 2)) {
      if (!ck.eval(p.x).is_zero()) continue;
      bool sing = true;
      for (const auto& d : partials)
        if (!d.eval(p.x).is_zero()) {
          sing = false;
          break;
        }
      if (sing) {
        v.smooth = false;
        v.singular_point = p;
        v.singular_k = m * j;
        return v;
      }
    }
  }
  return v;
}

namespace {

// is the restriction of ck to the dual line a a perfect square (or zero)?
bool line_is_bitangent(const MultiPoly& ck, const Vec& a, const Field& fk) {
  auto span = nullspace({a}, 3, fk);
  BinaryForm r = restrict_to_line(ck, span[0], span[1]);
  return r.is_zero() || is_square_form(r);
}

}  // namespace

StabilizedCount plane_bitangent_count(const PlaneQuartic& c, unsigned k_max,
                                      unsigned workers) {
  const Field& f0 = c.field();
  if (!f0.is_finite())
    throw std::invalid_argument("plane_bitangent_count: needs a finite field");
  unsigned m = f0.ff().k();
  if (k_max < m) throw std::invalid_argument("plane_bitangent_count: k_max below base degree");
  StabilizedCount out;
  for (unsigned k = m; k <= k_max; k += m) {
    Field fk = (k == m) ? f0 : Field::GF(2, k);
    MultiPoly ck = (k == m) ? c.c : embed_poly(c.c, fk);
    auto duals = enum_points(fk, 2);
    std::vector<std::vector<Vec>> parts(workers ? workers : 1);
    auto run = [&](unsigned w) {
      size_t nw = parts.size();
      for (size_t i = w; i < duals.size(); i += nw)
        if (line_is_bitangent(ck, duals[i].x, fk)) parts[w].push_back(duals[i].x);
    };
    if (parts.size() == 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      for (size_t w = 0; w < parts.size(); ++w) pool.emplace_back(run, w);
      for (auto& t : pool) t.join();
    }
    std::vector<Vec> wits;
    for (auto& p : parts)
      for (auto& v : p) wits.push_back(std::move(v));
    std::sort(wits.begin(), wits.end());
    out.ks.push_back(k);
    out.counts.push_back(static_cast<unsigned>(wits.size()));
    out.witnesses = std::move(wits);
    size_t t = out.counts.size();
    unsigned n = out.counts.back();
    if (t >= 3 && out.counts[t - 2] == n && out.counts[t - 3] == n &&
        (n == 7 || n == 4 || n == 2 || n == 1)) {
      out.stabilized = true;
      out.count = n;
      out.stable_k = out.ks[t - 3];
      break;
    }
  }
  return out;
}

unsigned classify_2rank(unsigned stabilized_count) {
  switch (stabilized_count) {
    case 7: return 3;
    case 4: return 2;
    case 2: return 1;
    case 1: return 0;
    default:
      throw std::invalid_argument(
          "classify_2rank: count outside {7,4,2,1} (singular curve or unstabilized?)");
  }
}

PlaneQuartic plane_section(const QuarticSurface& x, const ProjPlane& u) {
  const Field& f = x.field();
  auto span = nullspace({u.a}, 4, f);
  std::vector<MultiPoly> param;
  for (unsigned i = 0; i < 4; ++i) {
    MultiPoly m(f, 3);
    for (unsigned j = 0; j < 3; ++j)
      m.add_term(Mono{j == 0, j == 1, j == 2}, span[j][i]);
    param.push_back(std::move(m));
  }
  return PlaneQuartic(x.f.substitute(param));
}

}  // namespace quartica
