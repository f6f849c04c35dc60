#include "quartica/kummer.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace quartica {

namespace {

MultiPoly mono4(const Field& f, unsigned e0, unsigned e1, unsigned e2, unsigned e3,
                const FE& c) {
  MultiPoly m(f, 4);
  m.add_term(Mono{static_cast<uint16_t>(e0), static_cast<uint16_t>(e1),
                  static_cast<uint16_t>(e2), static_cast<uint16_t>(e3)},
             c);
  return m;
}

MultiPoly xvar(const Field& f, unsigned i) { return MultiPoly::var(f, 4, i); }

ProjPoint unit_point(const Field& f, unsigned i) {
  Vec v(4, FE::zero(f));
  v[i] = FE::one(f);
  return ProjPoint(f, v);
}

ProjPlane coord_plane(const Field& f, unsigned i) {
  Vec v(4, FE::zero(f));
  v[i] = FE::one(f);
  return ProjPlane(f, v);
}

Vec unit6(const Field& f, unsigned i) {
  Vec v(6, FE::zero(f));
  v[i] = FE::one(f);
  return v;
}

Vec sum6(const Field& f, unsigned i, unsigned j) {
  Vec v(6, FE::zero(f));
  v[i] = FE::one(f);
  v[j] = FE::one(f);
  return v;
}

PluckerLine coord_line(const Field& f, unsigned i, unsigned j) {
  return PluckerLine::from_points(unit_point(f, i), unit_point(f, j));
}

}  // namespace

KummerKind kummer_kind_parse(const std::string& s) {
  if (s == "ordinary") return KummerKind::Ordinary;
  if (s == "rank1") return KummerKind::Rank1;
  if (s == "supersingular") return KummerKind::Supersingular;
  throw std::invalid_argument("unknown family: " + s);
}

std::string kummer_kind_name(KummerKind k) {
  switch (k) {
    case KummerKind::Ordinary: return "ordinary";
    case KummerKind::Rank1: return "rank1";
    default: return "supersingular";
  }
}

const CremonaMap& KummerSurface::map(const std::string& name) const {
  for (const auto& m : maps)
    if (m.name == name) return m;
  throw std::invalid_argument("no such map: " + name);
}

KummerSurface make_kummer(const Field& f, const KummerParams& p) {
  if (f.characteristic() != 2)
    throw std::invalid_argument("make_kummer: needs characteristic 2");
  const FE one = FE::one(f);

  if (p.kind == KummerKind::Ordinary) {
    if (p.values.size() != 3)
      throw std::invalid_argument("ordinary family takes parameters a, b, c");
    const FE &a = p.values[0], &b = p.values[1], &c = p.values[2];
    if (a.is_zero()) throw std::invalid_argument("a must be nonzero");
    if (b.is_zero()) throw std::invalid_argument("b must be nonzero");
    if (c.is_zero()) throw std::invalid_argument("c must be nonzero");
    MultiPoly F = mono4(f, 2, 2, 0, 0, a) + mono4(f, 0, 0, 2, 2, a) +
                  mono4(f, 2, 0, 2, 0, b) + mono4(f, 0, 2, 0, 2, b) +
                  mono4(f, 2, 0, 0, 2, c) + mono4(f, 0, 2, 2, 0, c) +
                  mono4(f, 1, 1, 1, 1, one);
    KummerSurface k{p,
                    QuarticSurface(F),
                    {unit_point(f, 0), unit_point(f, 1), unit_point(f, 2), unit_point(f, 3)},
                    {coord_plane(f, 0), coord_plane(f, 1), coord_plane(f, 2),
                     coord_plane(f, 3)},
                    {},
                    {},
                    {3, 7}};
    auto cubic = [&](unsigned i, unsigned j, unsigned l) {
      Mono m{0, 0, 0, 0};
      m[i] = m[j] = m[l] = 1;
      MultiPoly out(f, 4);
      out.add_term(m, one);
      return out;
    };
    // orbit maps joining x to its conjugate on each bitangent pencil
    k.maps.push_back({"t1",
                      {cubic(0, 2, 3), cubic(1, 2, 3), cubic(0, 1, 2), cubic(0, 1, 3)},
                      true,
                      true});
    k.maps.push_back({"t2",
                      {cubic(0, 1, 3), cubic(0, 1, 2), cubic(1, 2, 3), cubic(0, 2, 3)},
                      true,
                      true});
    k.maps.push_back({"t3",
                      {cubic(0, 1, 2), cubic(0, 1, 3), cubic(0, 2, 3), cubic(1, 2, 3)},
                      true,
                      true});
    k.maps.push_back({"g1", {xvar(f, 1), xvar(f, 0), xvar(f, 3), xvar(f, 2)}, true, false});
    k.maps.push_back({"tinv",
                      {cubic(1, 2, 3), cubic(0, 2, 3), cubic(0, 1, 3), cubic(0, 1, 2)},
                      true,
                      false});
    k.components.push_back({"t1", unit6(f, 0), unit6(f, 5), false, std::nullopt, "t1"});
    k.components.push_back({"t2", unit6(f, 1), unit6(f, 4), false, std::nullopt, "t2"});
    k.components.push_back({"t3", unit6(f, 2), unit6(f, 3), false, std::nullopt, "t3"});
    return k;
  }

  if (p.kind == KummerKind::Rank1) {
    if (p.values.size() != 2)
      throw std::invalid_argument("rank1 family takes parameters alpha, beta");
    const FE &al = p.values[0], &be = p.values[1];
    if (be.is_zero()) throw std::invalid_argument("beta must be nonzero");
    MultiPoly F = mono4(f, 4, 0, 0, 0, be * be) + mono4(f, 2, 0, 2, 0, al * al) +
                  mono4(f, 2, 0, 1, 1, one) + mono4(f, 1, 1, 2, 0, one) +
                  mono4(f, 0, 2, 0, 2, one) + mono4(f, 0, 0, 4, 0, one);
    KummerSurface k{p,
                    QuarticSurface(F),
                    {unit_point(f, 1), unit_point(f, 3)},
                    {coord_plane(f, 0), coord_plane(f, 2)},
                    {},
                    {},
                    {2, 4}};
    k.maps.push_back({"s1",
                      {mono4(f, 1, 0, 2, 0, one), mono4(f, 0, 1, 2, 0, one),
                       mono4(f, 2, 0, 1, 0, be), mono4(f, 2, 0, 0, 1, be)},
                      true,
                      true});
    k.maps.push_back({"s2",
                      {mono4(f, 2, 0, 1, 0, one), mono4(f, 2, 0, 0, 1, one),
                       mono4(f, 1, 0, 2, 0, one), mono4(f, 0, 1, 2, 0, one)},
                      true,
                      true});
    k.maps.push_back({"tau",
                      {xvar(f, 2), xvar(f, 3), xvar(f, 0).scale(be), xvar(f, 1).scale(be)},
                      true,
                      false});
    k.components.push_back({"s1", unit6(f, 0), unit6(f, 5), false, std::nullopt, "s1"});
    k.components.push_back(
        {"s2cone", unit6(f, 1), sum6(f, 2, 3), true, coord_line(f, 1, 3), "s2"});
    return k;
  }

  if (p.values.size() != 1)
    throw std::invalid_argument("supersingular family takes parameter alpha");
  const FE& al = p.values[0];
  MultiPoly F = mono4(f, 3, 0, 0, 1, one) + mono4(f, 3, 1, 0, 0, al) +
                mono4(f, 2, 1, 1, 0, one) + mono4(f, 2, 0, 2, 0, al * al) +
                mono4(f, 1, 3, 0, 0, one) + mono4(f, 0, 2, 0, 2, one) +
                mono4(f, 0, 0, 4, 0, one);
  KummerSurface k{p,
                  QuarticSurface(F),
                  {unit_point(f, 3)},
                  {coord_plane(f, 0)},
                  {},
                  {},
                  {1, 2}};
  MultiPoly m2 = mono4(f, 3, 0, 0, 0, al) + mono4(f, 2, 0, 1, 0, one) +
                 mono4(f, 1, 2, 0, 0, one);
  MultiPoly m3 = mono4(f, 2, 1, 0, 0, al) + mono4(f, 2, 0, 0, 1, one) +
                 mono4(f, 0, 3, 0, 0, one);
  k.maps.push_back({"tss",
                    {mono4(f, 3, 0, 0, 0, one), mono4(f, 2, 1, 0, 0, one), m2, m3},
                    true,
                    true});
  k.components.push_back(
      {"sscone", unit6(f, 0), sum6(f, 2, 3), true, coord_line(f, 2, 3), "tss"});
  return k;
}

std::vector<ProjPoint> singular_points(const QuarticSurface& x) {
  const Field& f = x.field();
  if (!f.is_finite()) throw std::invalid_argument("singular_points: needs a finite field");
  std::vector<MultiPoly> partials;
  for (unsigned i = 0; i < 4; ++i) partials.push_back(x.f.partial(i));
  std::vector<ProjPoint> out;
  for (const auto& q : enum_points(f, 3)) {
    if (!x.f.eval(q.x).is_zero()) continue;
    bool sing = true;
    for (const auto& d : partials)
      if (!d.eval(q.x).is_zero()) {
        sing = false;
        break;
      }
    if (sing) out.push_back(q);
  }
  return out;
}

bool conic_smooth_char2(const MultiPoly& q3) {
  auto c = [&](unsigned i, unsigned j) {
    Mono m{0, 0, 0};
    m[i] += 1;
    m[j] += 1;
    return q3.coeff(m);
  };
  Vec s{c(1, 2), c(0, 2), c(0, 1)};
  if (is_zero_vec(s)) return false;  // a doubled line
  return !q3.eval(s).is_zero();
}

std::vector<TropeData> trope_data(const KummerSurface& k) {
  const Field& f = k.field();
  std::vector<TropeData> out;
  for (const auto& u : k.tropes) {
    auto conic = trope_conic(k.x, u);
    if (!conic) throw std::logic_error("trope_data: plane is not a trope");
    // restrict the ambient conic to the plane to judge smoothness
    auto span = nullspace({u.a}, 4, f);
    std::vector<MultiPoly> param;
    for (unsigned i = 0; i < 4; ++i) {
      MultiPoly m(f, 3);
      for (unsigned j = 0; j < 3; ++j) m.add_term(Mono{j == 0, j == 1, j == 2}, span[j][i]);
      param.push_back(std::move(m));
    }
    out.push_back({u, *conic, conic_smooth_char2(conic->substitute(param))});
  }
  return out;
}

PreserveCheck check_preserves(const QuarticSurface& x, const CremonaMap& m) {
  MultiPoly pulled = x.f.substitute(m.images);
  PreserveCheck r{false, MultiPoly::zero(x.field(), 4)};
  if (pulled.is_zero()) return r;
  auto mult = pulled.divide_exact(x.f);
  if (!mult) return r;
  r.preserves = true;
  r.multiplier = *mult;
  return r;
}

InvolutiveCheck check_involutive(const CremonaMap& m, const Field& f) {
  InvolutiveCheck r{false, MultiPoly::zero(f, 4)};
  std::vector<MultiPoly> comp;
  for (const auto& g : m.images) comp.push_back(g.substitute(m.images));
  int lead = -1;
  for (int i = 0; i < 4; ++i)
    if (!comp[i].is_zero()) {
      lead = i;
      break;
    }
  if (lead < 0) return r;  // the square collapses entirely
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (comp[i] * xvar(f, j) != comp[j] * xvar(f, i)) return r;
  auto mult = comp[lead].divide_exact(xvar(f, lead));
  if (!mult || mult->is_zero()) return r;
  r.involutive = true;
  r.multiplier = *mult;
  return r;
}

BitangentInvolutionCheck check_bitangent_involution(const QuarticSurface& x, const CremonaMap& m,
                                                    SplitMix64& rng, unsigned samples) {
  const Field& f = x.field();
  BitangentInvolutionCheck r;

  // symbolic tier: F(s x + t m(x)) has square restriction along every orbit
  // line iff its s^3 t and s t^3 coefficients vanish on the surface
  std::vector<MultiPoly> lift;  // x0..x3 into a ring with s = v4, t = v5
  for (unsigned i = 0; i < 4; ++i) lift.push_back(MultiPoly::var(f, 6, i));
  std::vector<MultiPoly> images6;
  for (unsigned i = 0; i < 4; ++i) {
    MultiPoly s_part = MultiPoly::var(f, 6, 4) * MultiPoly::var(f, 6, i);
    MultiPoly t_part = MultiPoly::var(f, 6, 5) * m.images[i].substitute(lift);
    images6.push_back(s_part + t_part);
  }
  MultiPoly pulled = x.f.substitute(images6);
  MultiPoly c1(f, 4), c3(f, 4);
  for (const auto& [mono, coef] : pulled.terms()) {
    Mono head(mono.begin(), mono.begin() + 4);
    if (mono[4] == 3 && mono[5] == 1) c1.add_term(head, coef);
    if (mono[4] == 1 && mono[5] == 3) c3.add_term(head, coef);
  }
  r.symbolic_pass =
      c1.reduce_mod(x.f).is_zero() && c3.reduce_mod(x.f).is_zero();

  // sampled tier: inspect actual orbit lines at random surface points
  unsigned used = 0, skipped = 0, tries = samples * 20;
  bool all_even = true;
  while (used < samples && tries-- > 0) {
    auto q = random_surface_point(x, rng, 16);
    if (!q) break;
    Vec img;
    for (const auto& g : m.images) img.push_back(g.eval(q->x));
    if (is_zero_vec(img)) {
      ++skipped;
      continue;
    }
    ProjPoint mq(f, img);
    if (mq == *q) {
      ++skipped;
      continue;
    }
    auto sig = line_signature(x, PluckerLine::from_points(*q, mq));
    ++used;
    for (unsigned e : sig)
      if (e % 2) all_even = false;
    if (!all_even) break;
  }
  r.samples_used = used;
  r.samples_skipped = skipped;
  r.sampled_pass = all_even && used >= samples / 2 + 1;
  return r;
}

CongruenceData plucker_congruence(const CremonaMap& m, const Field& f) {
  CongruenceData cd{{}, MultiPoly::zero(f, 4), {}, {}};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      cd.raw_minors.push_back(xvar(f, i) * m.images[j] - xvar(f, j) * m.images[i]);
  cd.common_factor = MultiPoly::constant(f, 4, FE::one(f));
  cd.reduced_minors = cd.raw_minors;

  bool any = false;
  for (const auto& g : cd.reduced_minors) any = any || !g.is_zero();

  auto divide_all = [&](const MultiPoly& g) -> bool {
    std::vector<MultiPoly> out;
    for (const auto& h : cd.reduced_minors) {
      if (h.is_zero()) {
        out.push_back(h);
        continue;
      }
      auto q = h.divide_exact(g);
      if (!q) return false;
      out.push_back(*q);
    }
    cd.reduced_minors = std::move(out);
    return true;
  };

  if (any) {
    // shared monomial content first
    Mono content(4, 0);
    bool first = true;
    for (const auto& h : cd.reduced_minors) {
      if (h.is_zero()) continue;
      Mono c = h.content_monomial();
      if (first) {
        content = c;
        first = false;
      } else {
        for (int v = 0; v < 4; ++v) content[v] = std::min(content[v], c[v]);
      }
    }
    if (mono_degree(content) > 0) {
      MultiPoly g(f, 4);
      g.add_term(content, FE::one(f));
      divide_all(g);
      cd.common_factor = cd.common_factor * g;
    }
    // then factors visible in a single minor: a content-stripped minor, or
    // its square root when it is a perfect square
    for (bool progress = true; progress;) {
      progress = false;
      for (const auto& h : cd.reduced_minors) {
        if (h.is_zero()) continue;
        MultiPoly g = h.divide_by_monomial(h.content_monomial());
        std::vector<MultiPoly> cands;
        if (g.total_degree() >= 1) {
          auto root = g.sqrt();
          if (root && root->total_degree() >= 1) cands.push_back(*root);
          cands.push_back(g);
        }
        for (const auto& cand : cands) {
          if (divide_all(cand)) {
            cd.common_factor = cd.common_factor * cand;
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
    }
  }

  // exact linear relations among the reduced minors
  std::set<Mono, GradedLex> monos;
  for (const auto& h : cd.reduced_minors)
    for (const auto& [mono, c] : h.terms()) monos.insert(mono);
  std::vector<Vec> rows;
  for (const auto& mono : monos) {
    Vec row;
    for (const auto& h : cd.reduced_minors) row.push_back(h.coeff(mono));
    rows.push_back(std::move(row));
  }
  cd.linear_relations = nullspace(rows, 6, f);
  return cd;
}

std::string relation_verdict(const MultiPoly& rel6, const CongruenceData& cd,
                             const QuarticSurface& x, SplitMix64& rng, unsigned samples) {
  MultiPoly value = rel6.substitute(cd.reduced_minors);
  if (value.is_zero()) return "identity";
  if (value.reduce_mod(x.f).is_zero()) return "mod_surface";
  unsigned used = 0, tries = samples * 20;
  while (used < samples && tries-- > 0) {
    auto q = random_surface_point(x, rng, 16);
    if (!q) break;
    if (!value.eval(q->x).is_zero()) return "fails";
    ++used;
  }
  if (used == 0) return "fails";
  std::ostringstream os;
  os << "sampled:" << used;
  return os.str();
}

MultiPoly inversion_cubic_relation(const Field& f) {
  auto v = [&](unsigned i) { return MultiPoly::var(f, 6, i); };
  return v(0) * v(1) * v(3) + v(0) * v(2) * v(4) + v(1) * v(2) * v(5) + v(3) * v(4) * v(5);
}

namespace {

PredictedRays predict(const KummerSurface& k, const std::vector<PluckerLine>& basis,
                      const std::vector<PluckerLine>& trope_rays) {
  const Field& f = k.field();
  PredictedRays out;
  for (const auto& comp : k.components) {
    std::vector<Vec> rows(2, Vec(3, FE::zero(f)));
    for (unsigned j = 0; j < 3; ++j) {
      rows[0][j] = dot(comp.l1, basis[j].p);
      rows[1][j] = dot(comp.l2, basis[j].p);
    }
    auto ns = nullspace(rows, 3, f);
    if (ns.size() != 1) {
      out.degenerate = true;
      continue;
    }
    Vec ray(6, FE::zero(f));
    for (unsigned j = 0; j < 3; ++j)
      for (unsigned c = 0; c < 6; ++c) ray[c] += ns[0][j] * basis[j].p[c];
    if (is_zero_vec(ray)) {
      out.degenerate = true;
      continue;
    }
    out.names.push_back(comp.name);
    out.rays.push_back(PluckerLine(f, ray));
  }
  for (size_t i = 0; i < trope_rays.size(); ++i) {
    std::ostringstream os;
    os << "trope" << i;
    out.names.push_back(os.str());
    out.rays.push_back(trope_rays[i]);
  }
  for (size_t i = 0; i < out.rays.size(); ++i)
    for (size_t j = i + 1; j < out.rays.size(); ++j)
      if (out.rays[i] == out.rays[j]) out.degenerate = true;
  return out;
}

}  // namespace

PredictedRays predicted_through_point(const KummerSurface& k, const ProjPoint& q) {
  return predict(k, alpha_plane_basis(q), {});
}

PredictedRays predicted_in_plane(const KummerSurface& k, const ProjPlane& u) {
  std::vector<PluckerLine> trope_rays;
  for (const auto& t : k.tropes) {
    if (t == u) throw std::invalid_argument("predicted_in_plane: plane is a trope");
    trope_rays.push_back(PluckerLine::from_planes(u, t));
  }
  return predict(k, beta_plane_basis(u), trope_rays);
}

ProjPoint draw_generic_point(const KummerSurface& k, SplitMix64& rng, unsigned max_redraws) {
  const Field& f = k.field();
  for (unsigned i = 0; i <= max_redraws; ++i) {
    ProjPoint q = random_point(f, 3, rng);
    if (k.x.f.eval(q.x).is_zero()) continue;
    bool on_trope = false;
    for (const auto& t : k.tropes) on_trope = on_trope || t.contains(q);
    if (on_trope) continue;
    if (predicted_through_point(k, q).degenerate) continue;
    return q;
  }
  throw std::runtime_error("draw_generic_point: no generic point found");
}

ProjPlane draw_generic_plane(const KummerSurface& k, SplitMix64& rng, unsigned max_redraws) {
  const Field& f = k.field();
  for (unsigned i = 0; i <= max_redraws; ++i) {
    ProjPlane u = random_plane(f, rng);
    bool bad = false;
    for (const auto& t : k.tropes) bad = bad || t == u;
    for (const auto& n : k.nodes) bad = bad || u.contains(n);
    if (bad) continue;
    if (predicted_in_plane(k, u).degenerate) continue;
    return u;
  }
  throw std::runtime_error("draw_generic_plane: no generic plane found");
}

QuarticSurface rotation_fixture(const Field& f) {
  return QuarticSurface(
      MultiPoly::parse(f, 4, "x0^3*x1 + x1^3*x2 + x2^3*x3 + x3^3*x0"));
}

CremonaMap rotation_map(const Field& f) {
  return {"rot", {xvar(f, 2), xvar(f, 3), xvar(f, 0), xvar(f, 1)}, true, false};
}

QuarticSurface center_fixture(const Field& f, const FE& a, const FE& b) {
  if (f.characteristic() != 2)
    throw std::invalid_argument("center_fixture: needs characteristic 2");
  MultiPoly lin = xvar(f, 0).scale(a) + xvar(f, 1).scale(b) + xvar(f, 2);
  MultiPoly w = xvar(f, 3);
  return QuarticSurface(w * w * lin * lin + mono4(f, 1, 3, 0, 0, FE::one(f)) +
                        mono4(f, 3, 0, 1, 0, FE::one(f)));
}

}  // namespace quartica
