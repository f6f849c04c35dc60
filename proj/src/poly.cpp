#include "quartica/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quartica {

namespace {

void check_vars(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars() || a.field() != b.field())
    throw std::invalid_argument("multipoly: operands live in different rings");
}

bool mono_divides(const Mono& d, const Mono& m) {
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

Mono mono_sub(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<uint16_t>(a[i] - b[i]);
  return r;
}

Mono mono_add(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<uint16_t>(a[i] + b[i]);
  return r;
}

}  // namespace

MultiPoly MultiPoly::constant(const Field& f, unsigned nvars, const FE& c) {
  MultiPoly r(f, nvars);
  r.add_term(Mono(nvars, 0), c);
  return r;
}

MultiPoly MultiPoly::var(const Field& f, unsigned nvars, unsigned i, unsigned e) {
  if (i >= nvars) throw std::invalid_argument("multipoly: variable index out of range");
  MultiPoly r(f, nvars);
  Mono m(nvars, 0);
  m[i] = static_cast<uint16_t>(e);
  r.add_term(m, FE::one(f));
  return r;
}

int MultiPoly::total_degree() const {
  if (t_.empty()) return -1;
  return static_cast<int>(mono_degree(t_.rbegin()->first));
}

bool MultiPoly::is_homogeneous(int* deg) const {
  if (t_.empty()) {
    if (deg) *deg = -1;
    return true;
  }
  unsigned d = mono_degree(t_.begin()->first);
  for (const auto& [m, c] : t_)
    if (mono_degree(m) != d) return false;
  if (deg) *deg = static_cast<int>(d);
  return true;
}

void MultiPoly::add_term(const Mono& m, const FE& c) {
  if (m.size() != nvars_) throw std::invalid_argument("multipoly: monomial arity mismatch");
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

FE MultiPoly::coeff(const Mono& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? FE::zero(field_) : it->second;
}

std::pair<Mono, FE> MultiPoly::leading_term() const {
  if (t_.empty()) throw std::domain_error("multipoly: zero polynomial has no leading term");
  return *t_.rbegin();
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_vars(*this, o);
  MultiPoly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_vars(*this, o);
  MultiPoly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, -c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(field_, nvars_);
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_vars(*this, o);
  MultiPoly r(field_, nvars_);
  for (const auto& [ma, ca] : t_)
    for (const auto& [mb, cb] : o.t_) r.add_term(mono_add(ma, mb), ca * cb);
  return r;
}

MultiPoly MultiPoly::scale(const FE& c) const {
  MultiPoly r(field_, nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : t_) r.t_.emplace(m, v * c);
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return nvars_ == o.nvars_ && field_ == o.field_ && t_ == o.t_;
}

MultiPoly MultiPoly::partial(unsigned var) const {
  if (var >= nvars_) throw std::invalid_argument("multipoly: variable index out of range");
  MultiPoly r(field_, nvars_);
  for (const auto& [m, c] : t_) {
    if (m[var] == 0) continue;
    Mono d = m;
    d[var] -= 1;
    r.add_term(d, c * FE::of_int(field_, m[var]));
  }
  return r;
}

FE MultiPoly::eval(const std::vector<FE>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("multipoly: evaluation arity mismatch");
  // power tables up to the max exponent of each variable
  std::vector<std::vector<FE>> pows(nvars_);
  for (unsigned i = 0; i < nvars_; ++i) pows[i].push_back(FE::one(field_));
  for (const auto& [m, c] : t_)
    for (unsigned i = 0; i < nvars_; ++i)
      while (pows[i].size() <= m[i]) pows[i].push_back(pows[i].back() * point[i]);
  FE acc = FE::zero(field_);
  for (const auto& [m, c] : t_) {
    FE term = c;
    for (unsigned i = 0; i < nvars_; ++i)
      if (m[i]) term = term * pows[i][m[i]];
    acc = acc + term;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != nvars_) throw std::invalid_argument("multipoly: substitution arity mismatch");
  for (const auto& im : images)
    if (im.nvars() != images[0].nvars() || im.field() != field_)
      throw std::invalid_argument("multipoly: substitution images live in different rings");
  unsigned out_vars = images[0].nvars();
  std::vector<std::vector<MultiPoly>> pows(nvars_);
  for (unsigned i = 0; i < nvars_; ++i)
    pows[i].push_back(MultiPoly::constant(field_, out_vars, FE::one(field_)));
  MultiPoly acc(field_, out_vars);
  for (const auto& [m, c] : t_) {
    MultiPoly term = MultiPoly::constant(field_, out_vars, c);
    for (unsigned i = 0; i < nvars_; ++i) {
      while (pows[i].size() <= m[i]) pows[i].push_back(pows[i].back() * images[i]);
      if (m[i]) term = term * pows[i][m[i]];
    }
    acc = acc + term;
  }
  return acc;
}

MultiPoly MultiPoly::map_field(const Field& target,
                               const std::function<FE(const FE&)>& fn) const {
  MultiPoly r(target, nvars_);
  for (const auto& [m, c] : t_) r.add_term(m, fn(c));
  return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& g) const {
  check_vars(*this, g);
  if (g.is_zero()) throw std::domain_error("multipoly: division by zero polynomial");
  MultiPoly rem = *this;
  MultiPoly q(field_, nvars_);
  auto [gm, gc] = g.leading_term();
  while (!rem.is_zero()) {
    auto [rm, rc] = rem.leading_term();
    if (!mono_divides(gm, rm)) return std::nullopt;
    Mono d = mono_sub(rm, gm);
    FE f = rc / gc;
    q.add_term(d, f);
    MultiPoly piece(field_, nvars_);
    piece.add_term(d, f);
    rem = rem - piece * g;
  }
  return q;
}

MultiPoly MultiPoly::reduce_mod(const MultiPoly& g) const {
  check_vars(*this, g);
  if (g.is_zero()) throw std::domain_error("multipoly: reduction by zero polynomial");
  MultiPoly rem = *this;
  MultiPoly out(field_, nvars_);
  auto [gm, gc] = g.leading_term();
  while (!rem.is_zero()) {
    auto [rm, rc] = rem.leading_term();
    if (mono_divides(gm, rm)) {
      Mono d = mono_sub(rm, gm);
      MultiPoly piece(field_, nvars_);
      piece.add_term(d, rc / gc);
      rem = rem - piece * g;
    } else {
      out.add_term(rm, rc);
      MultiPoly piece(field_, nvars_);
      piece.add_term(rm, rc);
      rem = rem - piece;
    }
  }
  return out;
}

std::optional<MultiPoly> MultiPoly::sqrt() const {
  if (is_zero()) return MultiPoly(field_, nvars_);
  if (field_.characteristic() == 2) {
    MultiPoly r(field_, nvars_);
    for (const auto& [m, c] : t_) {
      Mono h(nvars_);
      for (unsigned i = 0; i < nvars_; ++i) {
        if (m[i] % 2) return std::nullopt;
        h[i] = static_cast<uint16_t>(m[i] / 2);
      }
      r.add_term(h, c.sqrt_char2());
    }
    if (r * r != *this) return std::nullopt;
    return r;
  }
  // characteristic 0 or odd: peel terms greedily from the leading end
  auto [lm, lc] = leading_term();
  Mono h(nvars_);
  for (unsigned i = 0; i < nvars_; ++i) {
    if (lm[i] % 2) return std::nullopt;
    h[i] = static_cast<uint16_t>(lm[i] / 2);
  }
  auto root_lc = lc.sqrt();
  if (!root_lc) return std::nullopt;
  MultiPoly c(field_, nvars_);
  c.add_term(h, *root_lc);
  FE two_lead = FE::of_int(field_, 2) * (*root_lc);
  while (true) {
    MultiPoly rem = *this - c * c;
    if (rem.is_zero()) return c;
    auto [rm, rc] = rem.leading_term();
    if (!mono_divides(h, rm)) return std::nullopt;
    Mono d = mono_sub(rm, h);
    // next term must stay below every term already in c
    if (!GradedLex{}(d, c.terms().begin()->first)) return std::nullopt;
    c.add_term(d, rc / two_lead);
  }
}

Mono MultiPoly::content_monomial() const {
  if (t_.empty()) throw std::domain_error("multipoly: content of zero polynomial");
  Mono r = t_.begin()->first;
  for (const auto& [m, c] : t_)
    for (unsigned i = 0; i < nvars_; ++i) r[i] = std::min(r[i], m[i]);
  return r;
}

MultiPoly MultiPoly::divide_by_monomial(const Mono& m) const {
  MultiPoly r(field_, nvars_);
  for (const auto& [mm, c] : t_) {
    if (!mono_divides(m, mm)) throw std::domain_error("multipoly: monomial does not divide");
    r.t_.emplace(mono_sub(mm, m), c);
  }
  return r;
}

std::string MultiPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.str();
    for (unsigned i = 0; i < nvars_; ++i)
      if (it->first[i]) os << "*x" << i << "^" << it->first[i];
  }
  return os.str();
}

MultiPoly MultiPoly::parse(const Field& f, unsigned nvars, const std::string& s) {
  MultiPoly r(f, nvars);
  // split into terms on '+' at bracket depth 0, treating '-' as "+-"
  std::vector<std::string> pieces;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '[') depth++;
    if (ch == ']') depth--;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      if (ch == '-' && cur.find_first_not_of(" \t") == std::string::npos && pieces.empty()) {
        cur.push_back(ch);  // leading sign of the first term
        continue;
      }
      if (ch == '-' && !cur.empty() && cur.find_first_not_of(" \t") == std::string::npos) {
        cur.push_back(ch);  // sign right after a '+'
        continue;
      }
      if (ch == '+') {
        if (cur.find_first_not_of(" \t") != std::string::npos) pieces.push_back(cur);
        cur.clear();
        continue;
      }
      // '-' acting as a separator: close the current term, start "-..."
      if (cur.find_first_not_of(" \t") != std::string::npos) pieces.push_back(cur);
      cur = "-";
      continue;
    }
    cur.push_back(ch);
  }
  if (cur.find_first_not_of(" \t") != std::string::npos) pieces.push_back(cur);
  if (pieces.empty()) {
    std::string t = s;
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
    if (t == "0") return r;
    throw std::invalid_argument("multipoly parse: empty input");
  }
  for (auto& piece : pieces) {
    piece.erase(std::remove_if(piece.begin(), piece.end(),
                               [](char c) { return c == ' ' || c == '\t'; }),
                piece.end());
    if (piece == "0" || piece.empty()) continue;
    // split on '*'
    std::vector<std::string> toks;
    std::string t;
    int dep = 0;
    for (char ch : piece) {
      if (ch == '[') dep++;
      if (ch == ']') dep--;
      if (ch == '*' && dep == 0) {
        toks.push_back(t);
        t.clear();
      } else {
        t.push_back(ch);
      }
    }
    toks.push_back(t);
    FE c = FE::one(f);
    bool have_coeff = false;
    Mono m(nvars, 0);
    for (std::string tok : toks) {
      if (tok.empty()) throw std::invalid_argument("multipoly parse: empty factor");
      if (tok.size() > 1 && tok[0] == '-' && tok[1] == 'x') {
        c = -c;
        tok = tok.substr(1);
      }
      if (tok[0] == 'x') {
        auto caret = tok.find('^');
        unsigned idx, e = 1;
        if (caret == std::string::npos) {
          idx = static_cast<unsigned>(std::stoul(tok.substr(1)));
        } else {
          idx = static_cast<unsigned>(std::stoul(tok.substr(1, caret - 1)));
          e = static_cast<unsigned>(std::stoul(tok.substr(caret + 1)));
        }
        if (idx >= nvars) throw std::invalid_argument("multipoly parse: variable index out of range");
        m[idx] = static_cast<uint16_t>(m[idx] + e);
      } else {
        if (have_coeff) throw std::invalid_argument("multipoly parse: two coefficients in a term");
        if (tok == "-")
          c = -FE::one(f);
        else if (tok[0] == '-' && tok[1] == '[')
          c = -FE::parse(f, tok.substr(1));
        else
          c = FE::parse(f, tok);
        have_coeff = true;
      }
    }
    r.add_term(m, c);
  }
  return r;
}

// ---------------------------------------------------------------------------

UniPoly::UniPoly(Field f, std::vector<FE> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FE UniPoly::coeff(size_t i) const {
  return i < c_.size() ? c_[i] : FE::zero(field_);
}

FE UniPoly::lc() const {
  if (c_.empty()) throw std::domain_error("unipoly: leading coefficient of zero");
  return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<FE> r(std::max(c_.size(), o.c_.size()), FE::zero(field_));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<FE> r(std::max(c_.size(), o.c_.size()), FE::zero(field_));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly(field_);
  std::vector<FE> r(c_.size() + o.c_.size() - 1, FE::zero(field_));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::scale(const FE& s) const {
  std::vector<FE> r = c_;
  for (auto& x : r) x = x * s;
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(field_);
  std::vector<FE> r(c_.size() - 1, FE::zero(field_));
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * FE::of_int(field_, static_cast<long long>(i));
  return UniPoly(field_, std::move(r));
}

FE UniPoly::eval(const FE& x) const {
  FE acc = FE::zero(field_);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::make_monic(FE* unit) const {
  if (is_zero()) {
    if (unit) *unit = FE::one(field_);
    return *this;
  }
  FE u = lc();
  if (unit) *unit = u;
  return scale(u.inv());
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("unipoly: division by zero");
  UniPoly r = a;
  std::vector<FE> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1,
                    FE::zero(a.field_));
  FE binv = b.lc().inv();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    size_t shift = static_cast<size_t>(r.degree() - b.degree());
    FE f = r.lc() * binv;
    q[shift] = q[shift] + f;
    for (size_t i = 0; i < b.c_.size(); ++i)
      r.c_[i + shift] = r.c_[i + shift] - f * b.c_[i];
    r.trim();
  }
  return {UniPoly(a.field_, std::move(q)), r};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = b;
    b = r;
  }
  return a.make_monic();
}

std::optional<UniPoly> UniPoly::pth_root() const {
  if (!field_.is_finite()) throw std::domain_error("unipoly: p-th root needs positive characteristic");
  uint64_t p = field_.characteristic();
  unsigned k = field_.ff().k();
  if (is_zero()) return *this;
  std::vector<FE> r(c_.size() / p + 1, FE::zero(field_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (i % p) return std::nullopt;
    r[i / p] = c_[i].frobenius(k - 1);  // inverse Frobenius
  }
  return UniPoly(field_, std::move(r));
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_univariate(const UniPoly& f0) {
  if (f0.is_zero()) throw std::domain_error("squarefree: zero polynomial");
  std::vector<std::pair<UniPoly, unsigned>> out;
  UniPoly f = f0.make_monic();
  if (f.degree() == 0) return out;
  const Field& F = f.field();

  if (F.characteristic() == 0) {
    // Yun
    UniPoly fp = f.derivative();
    UniPoly u = UniPoly::gcd(f, fp);
    UniPoly w = UniPoly::divmod(f, u).first;
    UniPoly y = UniPoly::divmod(fp, u).first;
    UniPoly z = y - w.derivative();
    unsigned i = 1;
    while (w.degree() > 0) {
      UniPoly g = UniPoly::gcd(w, z);
      if (g.degree() > 0) out.emplace_back(g, i);
      w = UniPoly::divmod(w, g).first;
      y = UniPoly::divmod(z, g).first;
      z = y - w.derivative();
      ++i;
    }
    return out;
  }

  uint64_t p = F.characteristic();
  UniPoly fp = f.derivative();
  if (fp.is_zero()) {
    auto root = f.pth_root();
    if (!root) throw std::logic_error("squarefree: inseparable polynomial with no p-th root");
    for (auto& [g, m] : squarefree_univariate(*root))
      out.emplace_back(g, m * static_cast<unsigned>(p));
    return out;
  }
  UniPoly c = UniPoly::gcd(f, fp);
  UniPoly w = UniPoly::divmod(f, c).first;
  unsigned i = 1;
  while (w.degree() > 0) {
    UniPoly y = UniPoly::gcd(w, c);
    UniPoly z = UniPoly::divmod(w, y).first;
    if (z.degree() > 0) out.emplace_back(z, i);
    ++i;
    w = y;
    c = UniPoly::divmod(c, y).first;
  }
  if (c.degree() > 0) {
    auto root = c.pth_root();
    if (!root) throw std::logic_error("squarefree: residual part has no p-th root");
    for (auto& [g, m] : squarefree_univariate(*root))
      out.emplace_back(g, m * static_cast<unsigned>(p));
  }
  return out;
}

// ---------------------------------------------------------------------------

BinaryForm::BinaryForm(Field f, std::vector<FE> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("binary form: empty coefficient vector");
}

BinaryForm BinaryForm::zero(const Field& f, unsigned degree) {
  return BinaryForm(f, std::vector<FE>(degree + 1, FE::zero(f)));
}

bool BinaryForm::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

FE BinaryForm::eval(const FE& s, const FE& t) const {
  unsigned d = degree();
  FE acc = FE::zero(field_);
  std::vector<FE> sp(d + 1, FE::one(field_)), tp(d + 1, FE::one(field_));
  for (unsigned i = 1; i <= d; ++i) {
    sp[i] = sp[i - 1] * s;
    tp[i] = tp[i - 1] * t;
  }
  for (unsigned i = 0; i <= d; ++i) acc = acc + c_[i] * sp[d - i] * tp[i];
  return acc;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  unsigned d = degree() + o.degree();
  std::vector<FE> r(d + 1, FE::zero(field_));
  for (unsigned i = 0; i < c_.size(); ++i)
    for (unsigned j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
  return BinaryForm(field_, std::move(r));
}

BinaryForm BinaryForm::scale(const FE& s) const {
  std::vector<FE> r = c_;
  for (auto& x : r) x = x * s;
  return BinaryForm(field_, std::move(r));
}

BinaryForm BinaryForm::pow(unsigned e) const {
  BinaryForm acc(field_, {FE::one(field_)});
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

bool BinaryForm::operator==(const BinaryForm& o) const {
  return field_ == o.field_ && c_ == o.c_;
}

std::string BinaryForm::str() const {
  std::ostringstream os;
  bool first = true;
  unsigned d = degree();
  for (unsigned i = 0; i <= d; ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].str();
    if (d - i) os << "*s^" << (d - i);
    if (i) os << "*t^" << i;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

// f(s,1) read low-to-high in s
UniPoly dehomogenize(const BinaryForm& f) {
  unsigned d = f.degree();
  std::vector<FE> c(d + 1, FE::zero(f.field()));
  for (unsigned i = 0; i <= d; ++i) c[d - i] = f.coeff(i);
  return UniPoly(f.field(), std::move(c));
}

// degree-e univariate back to a degree-e binary form
BinaryForm homogenize(const UniPoly& g) {
  int e = g.degree();
  std::vector<FE> c(static_cast<size_t>(e) + 1, FE::zero(g.field()));
  for (int j = 0; j <= e; ++j) c[static_cast<size_t>(e - j)] = g.coeff(static_cast<size_t>(j));
  return BinaryForm(g.field(), std::move(c));
}

}  // namespace

SquarefreeDecomposition squarefree_decomposition(const BinaryForm& f) {
  if (f.is_zero()) throw std::domain_error("squarefree: zero binary form");
  const Field& F = f.field();
  unsigned d = f.degree();
  UniPoly u = dehomogenize(f);
  unsigned mult_inf = d - static_cast<unsigned>(u.degree());  // root [1:0]
  SquarefreeDecomposition out{{}, FE::one(F)};
  out.unit = u.lc();
  if (mult_inf)
    out.factors.emplace_back(BinaryForm(F, {FE::zero(F), FE::one(F)}), mult_inf);  // the form t
  if (u.degree() > 0)
    for (auto& [g, m] : squarefree_univariate(u)) out.factors.emplace_back(homogenize(g), m);
  return out;
}

std::vector<unsigned> multiplicity_signature(const BinaryForm& f) {
  auto dec = squarefree_decomposition(f);
  std::vector<unsigned> sig;
  for (const auto& [g, m] : dec.factors)
    for (unsigned i = 0; i < g.degree(); ++i) sig.push_back(m);
  std::sort(sig.rbegin(), sig.rend());
  return sig;
}

std::optional<BinaryForm> square_root_form(const BinaryForm& f) {
  if (f.is_zero()) return std::nullopt;
  auto dec = squarefree_decomposition(f);
  for (const auto& [g, m] : dec.factors)
    if (m % 2) return std::nullopt;
  auto su = dec.unit.sqrt();
  if (!su) return std::nullopt;
  BinaryForm root(f.field(), {*su});
  for (const auto& [g, m] : dec.factors) root = root * g.pow(m / 2);
  return root;
}

FE resultant(const BinaryForm& f, const BinaryForm& g) {
  const Field& F = f.field();
  unsigned m = f.degree(), n = g.degree();
  if (m == 0 || n == 0) {
    // Res of a constant c against degree-n form is c^n
    if (m == 0) return f.coeff(0).pow(n);
    return g.coeff(0).pow(m);
  }
  unsigned N = m + n;
  std::vector<std::vector<FE>> a(N, std::vector<FE>(N, FE::zero(F)));
  for (unsigned r = 0; r < n; ++r)
    for (unsigned j = 0; j <= m; ++j) a[r][r + j] = f.coeff(j);
  for (unsigned r = 0; r < m; ++r)
    for (unsigned j = 0; j <= n; ++j) a[n + r][r + j] = g.coeff(j);
  // Gaussian elimination, tracking determinant
  FE det = FE::one(F);
  for (unsigned col = 0; col < N; ++col) {
    unsigned piv = col;
    while (piv < N && a[piv][col].is_zero()) ++piv;
    if (piv == N) return FE::zero(F);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det = det * a[col][col];
    FE inv = a[col][col].inv();
    for (unsigned r = col + 1; r < N; ++r) {
      if (a[r][col].is_zero()) continue;
      FE fmul = a[r][col] * inv;
      for (unsigned cc = col; cc < N; ++cc) a[r][cc] = a[r][cc] - fmul * a[col][cc];
    }
  }
  return det;
}

BinaryForm restrict_to_line(const MultiPoly& F, const std::vector<FE>& a,
                            const std::vector<FE>& b) {
  if (a.size() != F.nvars() || b.size() != F.nvars())
    throw std::invalid_argument("restrict_to_line: point arity mismatch");
  int deg = 0;
  if (!F.is_homogeneous(&deg))
    throw std::invalid_argument("restrict_to_line: form is not homogeneous");
  if (F.is_zero()) return BinaryForm::zero(F.field(), 0);
  const Field& K = F.field();
  unsigned d = static_cast<unsigned>(deg);
  std::vector<FE> out(d + 1, FE::zero(K));  // out[i] ~ s^(d-i) t^i
  // Pascal triangle once, enough rows for the largest exponent
  unsigned emax = 1;
  for (const auto& [m, c] : F.terms())
    for (auto e : m) emax = std::max(emax, static_cast<unsigned>(e));
  std::vector<std::vector<long long>> binom(emax + 1);
  for (unsigned i = 0; i <= emax; ++i) {
    binom[i].assign(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
  }
  for (const auto& [m, c] : F.terms()) {
    // product over variables of (a_i s + b_i t)^{e_i}, tracked by t-degree
    std::vector<FE> acc{c};
    for (unsigned i = 0; i < F.nvars(); ++i) {
      unsigned e = m[i];
      if (!e) continue;
      std::vector<FE> fac(e + 1, FE::zero(K));  // fac[j] = C(e,j) a^(e-j) b^j  (t-degree j)
      std::vector<FE> ap(e + 1, FE::one(K)), bp(e + 1, FE::one(K));
      for (unsigned j = 1; j <= e; ++j) {
        ap[j] = ap[j - 1] * a[i];
        bp[j] = bp[j - 1] * b[i];
      }
      for (unsigned j = 0; j <= e; ++j)
        fac[j] = FE::of_int(K, binom[e][j]) * ap[e - j] * bp[j];
      std::vector<FE> next(acc.size() + e, FE::zero(K));
      for (size_t x = 0; x < acc.size(); ++x) {
        if (acc[x].is_zero()) continue;
        for (unsigned j = 0; j <= e; ++j) next[x + j] = next[x + j] + acc[x] * fac[j];
      }
      acc = std::move(next);
    }
    for (size_t j = 0; j < acc.size(); ++j) out[j] = out[j] + acc[j];
  }
  return BinaryForm(K, std::move(out));
}

}  // namespace quartica
