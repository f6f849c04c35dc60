#include "quartica/bitangent.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace quartica {

QuarticSurface::QuarticSurface(MultiPoly form) : f(std::move(form)) {
  if (f.nvars() != 4) throw std::invalid_argument("QuarticSurface: need 4 variables");
  int deg = 0;
  if (f.is_zero() || !f.is_homogeneous(&deg) || deg != 4)
    throw std::invalid_argument("QuarticSurface: form must be homogeneous of degree 4");
}

std::vector<unsigned> line_signature(const QuarticSurface& x, const PluckerLine& l) {
  auto [a, b] = l.span_points();
  BinaryForm r = restrict_to_line(x.f, a.x, b.x);
  if (r.is_zero()) return {};
  return multiplicity_signature(r);
}

std::string signature_key(const std::vector<unsigned>& sig) {
  if (sig.empty()) return "contained";
  std::ostringstream os;
  for (unsigned m : sig) os << m;
  return os.str();
}

LineType type_from_signature(const std::vector<unsigned>& sig) {
  if (sig.empty()) return LineType::Contained;
  if (sig[0] == 4) return LineType::Bitangent;
  if (sig[0] == 3) return LineType::FlexLine;
  if (sig[0] == 2) return sig[1] == 2 ? LineType::Bitangent : LineType::SimpleTangent;
  return LineType::Transversal;
}

LineType classify_line(const QuarticSurface& x, const PluckerLine& l) {
  return type_from_signature(line_signature(x, l));
}

namespace {

ScanResult scan_lines(const QuarticSurface& x, const std::vector<PluckerLine>& lines,
                      unsigned workers) {
  workers = std::max(1u, workers);
  size_t n = lines.size();
  workers = static_cast<unsigned>(std::min<size_t>(workers, std::max<size_t>(n, 1)));
  std::vector<ScanResult> parts(workers);
  auto run = [&](unsigned w) {
    size_t chunk = (n + workers - 1) / workers;
    size_t lo = w * chunk, hi = std::min(n, lo + chunk);
    ScanResult& out = parts[w];
    for (size_t i = lo; i < hi; ++i) {
      auto sig = line_signature(x, lines[i]);
      out.lines_scanned++;
      out.by_signature[signature_key(sig)]++;
      if (type_from_signature(sig) == LineType::Bitangent) {
        out.bitangents++;
        out.witnesses.push_back(lines[i]);
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> ts;
    for (unsigned w = 0; w < workers; ++w) ts.emplace_back(run, w);
    for (auto& t : ts) t.join();
  }
  ScanResult total;
  for (auto& p : parts) {
    total.lines_scanned += p.lines_scanned;
    total.bitangents += p.bitangents;
    for (auto& [k, v] : p.by_signature) total.by_signature[k] += v;
    total.witnesses.insert(total.witnesses.end(), p.witnesses.begin(), p.witnesses.end());
  }
  return total;
}

}  // namespace

ScanResult order_count(const QuarticSurface& x, const ProjPoint& q, unsigned workers) {
  return scan_lines(x, enum_lines_through(q), workers);
}

ScanResult class_count(const QuarticSurface& x, const ProjPlane& u, unsigned workers) {
  return scan_lines(x, enum_lines_in(u), workers);
}

std::vector<ProjPoint> inseparable_centers(const QuarticSurface& x) {
  const Field& f = x.field();
  std::vector<MultiPoly> partials;
  std::set<Mono, GradedLex> monos;
  for (unsigned i = 0; i < 4; ++i) {
    partials.push_back(x.f.partial(i));
    for (auto& [m, c] : partials.back().terms()) monos.insert(m);
  }
  std::vector<Vec> rows;
  for (const auto& m : monos) {
    Vec row;
    for (unsigned i = 0; i < 4; ++i) row.push_back(partials[i].coeff(m));
    rows.push_back(std::move(row));
  }
  auto basis = nullspace(rows, 4, f);
  if (basis.empty()) return {};
  if (basis.size() == 1) return {ProjPoint(f, basis[0])};
  if (!f.is_finite())
    throw std::invalid_argument("inseparable_centers: locus is positive-dimensional over QQ");
  std::vector<ProjPoint> out;
  for (const auto& c : enum_points(f, static_cast<unsigned>(basis.size()) - 1)) {
    Vec v(4, FE::zero(f));
    for (size_t i = 0; i < basis.size(); ++i)
      for (unsigned j = 0; j < 4; ++j) v[j] += c.x[i] * basis[i][j];
    out.emplace_back(f, v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// any particular solution of rows * v = t
Vec solve_particular(std::vector<Vec> rows, const Vec& t, unsigned ncols, const Field& f) {
  for (size_t i = 0; i < rows.size(); ++i) rows[i].push_back(t[i]);
  auto red = row_reduce(std::move(rows));
  Vec v(ncols, FE::zero(f));
  for (const auto& r : red) {
    size_t lead = 0;
    while (lead < ncols && r[lead].is_zero()) ++lead;
    if (lead == ncols) throw std::invalid_argument("solve_particular: inconsistent system");
    v[lead] = r[ncols];
  }
  return v;
}

}  // namespace

std::optional<MultiPoly> trope_conic(const QuarticSurface& x, const ProjPlane& u) {
  const Field& f = x.field();
  auto span = nullspace({u.a}, 4, f);  // three points spanning the plane
  std::vector<MultiPoly> param;
  for (unsigned i = 0; i < 4; ++i) {
    MultiPoly m(f, 3);
    for (unsigned j = 0; j < 3; ++j) m.add_term(Mono{j == 0, j == 1, j == 2}, span[j][i]);
    param.push_back(std::move(m));
  }
  MultiPoly g = x.f.substitute(param);
  auto r = g.sqrt();
  if (!r) return std::nullopt;
  // a left inverse of the parametrization sends x back to plane coordinates
  std::vector<Vec> rows{span[0], span[1], span[2]};
  std::vector<MultiPoly> back;
  for (unsigned j = 0; j < 3; ++j) {
    Vec e(3, FE::zero(f));
    e[j] = FE::one(f);
    Vec m = solve_particular(rows, e, 4, f);
    MultiPoly lin(f, 4);
    for (unsigned i = 0; i < 4; ++i)
      lin.add_term(Mono{i == 0, i == 1, i == 2, i == 3}, m[i]);
    back.push_back(std::move(lin));
  }
  return r->substitute(back);
}

Bidegree bitangent_bidegree_char0(unsigned d) {
  return {d * (d - 1) * (d - 2) * (d - 3) / 2, d * (d - 2) * (d - 3) * (d + 3) / 2};
}

Bidegree flex_bidegree_char0(unsigned d) {
  return {d * (d - 1) * (d - 2), 3 * d * (d - 2)};
}

unsigned bitangent_order_bound_char2(unsigned d) {
  return d * (d - 1) * (d - 2) * (d - 3) / 4;
}

std::optional<ProjPoint> random_surface_point(const QuarticSurface& x, SplitMix64& rng,
                                              unsigned tries) {
  const Field& f = x.field();
  if (!f.is_finite())
    throw std::invalid_argument("random_surface_point: needs a finite field");
  auto p1 = enum_points_p1(f);
  for (unsigned t = 0; t < tries; ++t) {
    ProjPoint a = random_point(f, 3, rng);
    ProjPoint b = random_point(f, 3, rng);
    if (a == b) continue;
    BinaryForm r = restrict_to_line(x.f, a.x, b.x);
    if (r.is_zero()) return a;
    for (const auto& st : p1) {
      if (!r.eval(st.x[0], st.x[1]).is_zero()) continue;
      Vec v(4, FE::zero(f));
      for (unsigned i = 0; i < 4; ++i) v[i] = st.x[0] * a.x[i] + st.x[1] * b.x[i];
      if (!is_zero_vec(v)) return ProjPoint(f, v);
    }
  }
  return std::nullopt;
}

}  // namespace quartica
