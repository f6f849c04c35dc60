#include "quartica/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace quartica {

namespace {

constexpr uint64_t kTableCap = 1u << 20;  // build log tables up to this q

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// dense little-endian polynomials over GF(p), used only for field plumbing
using PPoly = std::vector<uint32_t>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t(a[i]) * b[j]) % p);
  ptrim(r);
  return r;
}

// remainder of a by monic b
PPoly pmod(PPoly a, const PPoly& b, uint64_t p) {
  ptrim(a);
  while (a.size() >= b.size()) {
    uint64_t c = a.back();  // b is monic
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      uint64_t sub = (c * b[i]) % p;
      a[i + shift] = static_cast<uint32_t>((a[i + shift] + p - sub) % p);
    }
    ptrim(a);
  }
  return a;
}

uint64_t ppow_int(uint64_t p, unsigned k) {
  uint64_t r = 1;
  while (k--) r *= p;
  return r;
}

PPoly idx_to_poly(uint64_t a, uint64_t p) {
  PPoly r;
  while (a) {
    r.push_back(static_cast<uint32_t>(a % p));
    a /= p;
  }
  return r;
}

uint64_t poly_to_idx(const PPoly& f, uint64_t p) {
  uint64_t r = 0;
  for (size_t i = f.size(); i-- > 0;) r = r * p + f[i];
  return r;
}

bool divides_poly(const PPoly& d, const PPoly& f, uint64_t p) {
  // d monic after normalization
  if (d.empty()) return false;
  PPoly dm = d;
  uint64_t lc = dm.back();
  if (lc != 1) {
    // normalize by lc^{-1} via Fermat in GF(p)
    uint64_t inv = 1, e = p - 2, b = lc;
    while (e) {
      if (e & 1) inv = inv * b % p;
      b = b * b % p;
      e >>= 1;
    }
    for (auto& c : dm) c = static_cast<uint32_t>(uint64_t(c) * inv % p);
  }
  return pmod(f, dm, p).empty();
}

bool is_irreducible(const PPoly& f, uint64_t p) {
  // trial division by all monic polynomials of degree 1..deg/2
  unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= deg / 2; ++d) {
    uint64_t count = ppow_int(p, d);
    for (uint64_t lo = 0; lo < count; ++lo) {
      PPoly cand = idx_to_poly(lo, p);
      cand.resize(d + 1, 0);
      cand[d] = 1;
      if (divides_poly(cand, f, p)) return false;
    }
  }
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::mutex g_field_mutex;
std::map<std::pair<uint64_t, unsigned>, FFPtr> g_field_cache;
std::map<std::tuple<uint64_t, unsigned, unsigned>, uint64_t> g_embed_cache;

}  // namespace

FFPtr FiniteField::make(uint64_t p, unsigned k) {
  if (!is_prime(p)) throw std::invalid_argument("finite field: characteristic must be prime");
  if (k == 0) throw std::invalid_argument("finite field: extension degree must be positive");
  {
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto it = g_field_cache.find({p, k});
    if (it != g_field_cache.end()) return it->second;
  }
  // smallest monic irreducible in lex order on (c_{k-1},...,c_0)
  std::vector<uint32_t> mod;
  if (k == 1) {
    mod = {0, 1};  // t
  } else {
    uint64_t count = ppow_int(p, k);
    bool found = false;
    for (uint64_t code = 0; code < count && !found; ++code) {
      // code spells (c_{k-1},...,c_0) with c_{k-1} as the most significant digit
      PPoly f(k + 1, 0);
      f[k] = 1;
      uint64_t c = code;
      for (unsigned i = 0; i < k; ++i) {  // i=0 -> constant term (least significant)
        f[i] = static_cast<uint32_t>(c % p);
        c /= p;
      }
      if (is_irreducible(f, p)) {
        mod = f;
        found = true;
      }
    }
    if (!found) throw std::logic_error("finite field: no irreducible modulus found");
  }
  auto ff = make(p, k, std::move(mod));
  std::lock_guard<std::mutex> lock(g_field_mutex);
  g_field_cache[{p, k}] = ff;
  return ff;
}

FFPtr FiniteField::make(uint64_t p, unsigned k, std::vector<uint32_t> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("finite field: characteristic must be prime");
  if (k == 0) throw std::invalid_argument("finite field: extension degree must be positive");
  if (modulus.size() != k + 1 || modulus[k] != 1)
    throw std::invalid_argument("finite field: modulus must be monic of degree k");
  for (auto c : modulus)
    if (c >= p) throw std::invalid_argument("finite field: modulus coefficient out of range");
  if (k > 1 && !is_irreducible(modulus, p))
    throw std::invalid_argument("finite field: modulus is reducible");
  uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > (uint64_t(1) << 40) / p) throw std::invalid_argument("finite field: q too large");
    q *= p;
  }
  auto* raw = new FiniteField();
  raw->p_ = p;
  raw->k_ = k;
  raw->q_ = q;
  raw->modulus_ = std::move(modulus);
  raw->build_tables();
  return FFPtr(raw);
}

uint64_t FiniteField::add(uint64_t a, uint64_t b) const {
  if (p_ == 2) return a ^ b;
  uint64_t r = 0, mult = 1;
  while (a || b) {
    uint64_t da = a % p_, db = b % p_;
    r += ((da + db) % p_) * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

uint64_t FiniteField::neg(uint64_t a) const {
  if (p_ == 2) return a;
  uint64_t r = 0, mult = 1;
  while (a) {
    uint64_t da = a % p_;
    r += ((p_ - da) % p_) * mult;
    mult *= p_;
    a /= p_;
  }
  return r;
}

uint64_t FiniteField::sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

uint64_t FiniteField::mul_nocache(uint64_t a, uint64_t b) const {
  PPoly r = pmod(pmul(idx_to_poly(a, p_), idx_to_poly(b, p_), p_), modulus_, p_);
  return poly_to_idx(r, p_);
}

uint64_t FiniteField::mul(uint64_t a, uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  if (tables_) return exp_[log_[a] + log_[b]];
  return mul_nocache(a, b);
}

uint64_t FiniteField::pow(uint64_t a, uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (tables_) {
    uint64_t le = (uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[le];
  }
  uint64_t r = 1, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

uint64_t FiniteField::inv(uint64_t a) const {
  if (a == 0) throw std::domain_error("finite field: division by zero");
  if (tables_) return exp_[(q_ - 1) - log_[a]];
  return pow(a, q_ - 2);
}

uint64_t FiniteField::div(uint64_t a, uint64_t b) const { return mul(a, inv(b)); }

uint64_t FiniteField::from_int(long long n) const {
  long long m = n % static_cast<long long>(p_);
  if (m < 0) m += static_cast<long long>(p_);
  return static_cast<uint64_t>(m);
}

uint64_t FiniteField::frobenius(uint64_t a, unsigned e) const {
  e %= k_;
  uint64_t r = a;
  for (unsigned i = 0; i < e; ++i) r = pow(r, p_);
  return r;
}

uint64_t FiniteField::sqrt_char2(uint64_t a) const {
  if (p_ != 2) throw std::domain_error("sqrt_char2: field characteristic is not 2");
  return frobenius(a, k_ - 1);  // a^(2^(k-1)), identity when k=1
}

std::optional<uint64_t> FiniteField::sqrt(uint64_t a) const {
  if (p_ == 2) return sqrt_char2(a);
  if (a == 0) return 0;
  // Euler criterion then direct scan (fields here are small)
  if (pow(a, (q_ - 1) / 2) != 1) return std::nullopt;
  for (uint64_t x = 1; x < q_; ++x)
    if (mul(x, x) == a) return x;
  return std::nullopt;
}

void FiniteField::build_tables() {
  if (q_ > kTableCap || q_ <= 2) {
    tables_ = false;
    return;
  }
  // find a primitive element by order test against the prime factors of q-1
  auto pf = prime_factors(q_ - 1);
  uint64_t gen = 0;
  for (uint64_t g = 1; g < q_; ++g) {
    bool ok = true;
    for (uint64_t ell : pf) {
      // g^((q-1)/ell) without tables
      uint64_t e = (q_ - 1) / ell, r = 1, b = g;
      while (e) {
        if (e & 1) r = mul_nocache(r, b);
        b = mul_nocache(b, b);
        e >>= 1;
      }
      if (r == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = g;
      break;
    }
  }
  if (!gen) throw std::logic_error("finite field: no primitive element");
  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  uint64_t acc = 1;
  for (uint64_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = static_cast<uint32_t>(acc);
    exp_[i + (q_ - 1)] = static_cast<uint32_t>(acc);
    log_[acc] = static_cast<uint32_t>(i);
    acc = mul_nocache(acc, gen);
  }
  tables_ = true;
}

std::string FiniteField::name() const {
  std::ostringstream os;
  if (k_ == 1)
    os << "GF(" << p_ << ")";
  else
    os << "GF(" << p_ << "^" << k_ << ")";
  return os.str();
}

std::string FiniteField::elem_str(uint64_t a) const {
  std::ostringstream os;
  os << "[";
  uint64_t v = a;
  for (unsigned i = 0; i < k_; ++i) {
    if (i) os << ",";
    os << v % p_;
    v /= p_;
  }
  os << "]";
  return os.str();
}

uint64_t FiniteField::parse_elem(const std::string& s) const {
  std::string t = s;
  t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
  if (t.empty()) throw std::invalid_argument("element parse: empty string");
  if (t.front() == '[') {
    if (t.back() != ']') throw std::invalid_argument("element parse: unbalanced brackets");
    std::string body = t.substr(1, t.size() - 2);
    std::vector<uint64_t> digits;
    std::stringstream ss(body);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      if (piece.empty()) throw std::invalid_argument("element parse: empty coefficient");
      digits.push_back(std::stoull(piece));
    }
    if (digits.size() > k_) throw std::invalid_argument("element parse: too many coefficients");
    uint64_t r = 0;
    for (size_t i = digits.size(); i-- > 0;) {
      if (digits[i] >= p_) throw std::invalid_argument("element parse: coefficient out of range");
      r = r * p_ + digits[i];
    }
    return r;
  }
  long long n = std::stoll(t);
  return from_int(n);
}

uint64_t FiniteField::embed(const FiniteField& from, uint64_t a, const FiniteField& into) {
  if (from.p() != into.p())
    throw std::invalid_argument("embed: fields have different characteristic");
  if (into.k() % from.k() != 0)
    throw std::invalid_argument("embed: no embedding, source degree does not divide target degree");
  if (from.same(into)) return a;
  if (from.k() == 1) return a;  // prime field lifts as a constant
  uint64_t root;
  {
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto key = std::make_tuple(from.p(), from.k(), into.k());
    auto it = g_embed_cache.find(key);
    if (it != g_embed_cache.end()) {
      root = it->second;
    } else {
      root = 0;
      bool found = false;
      const auto& m = from.modulus();
      for (uint64_t x = 0; x < into.q() && !found; ++x) {
        // Horner evaluation of the source modulus at x inside `into`
        uint64_t acc = 0;
        for (size_t i = m.size(); i-- > 0;) {
          acc = into.mul(acc, x);
          acc = into.add(acc, m[i]);  // prime-subfield constant
        }
        if (acc == 0) {
          root = x;
          found = true;
        }
      }
      if (!found) throw std::logic_error("embed: modulus has no root in target field");
      g_embed_cache[key] = root;
    }
  }
  // evaluate a's representative at the root
  uint64_t acc = 0, v = a;
  std::vector<uint32_t> digits(from.k(), 0);
  for (unsigned i = 0; i < from.k(); ++i) {
    digits[i] = static_cast<uint32_t>(v % from.p());
    v /= from.p();
  }
  for (size_t i = digits.size(); i-- > 0;) {
    acc = into.mul(acc, root);
    acc = into.add(acc, digits[i]);
  }
  return acc;
}

// ---------------------------------------------------------------------------

const FiniteField& Field::ff() const {
  if (!ff_) throw std::domain_error("field: not a finite field");
  return *ff_;
}

std::string Field::name() const { return ff_ ? ff_->name() : "QQ"; }

bool Field::operator==(const Field& o) const {
  if (is_rational() != o.is_rational()) return false;
  if (is_rational()) return true;
  return ff_ == o.ff_ || ff_->same(*o.ff_);
}

Field Field::parse(const std::string& s) {
  std::string t = s;
  t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
  if (t == "QQ" || t == "Q") return Field::QQ();
  if (t.rfind("GF(", 0) == 0 && t.back() == ')') {
    std::string body = t.substr(3, t.size() - 4);
    auto caret = body.find('^');
    uint64_t p;
    unsigned k = 1;
    if (caret == std::string::npos) {
      p = std::stoull(body);
    } else {
      p = std::stoull(body.substr(0, caret));
      k = static_cast<unsigned>(std::stoul(body.substr(caret + 1)));
    }
    return Field::GF(p, k);
  }
  throw std::invalid_argument("field parse: expected \"GF(p^k)\" or \"QQ\", got \"" + s + "\"");
}

// ---------------------------------------------------------------------------

FE FE::zero(const Field& f) { return FE(f); }

FE FE::one(const Field& f) {
  FE r(f);
  if (f.is_rational())
    r.rat_ = 1;
  else
    r.idx_ = 1;
  return r;
}

FE FE::of_int(const Field& f, long long n) {
  FE r(f);
  if (f.is_rational())
    r.rat_ = n;
  else
    r.idx_ = f.ff().from_int(n);
  return r;
}

FE FE::ffe(const Field& f, uint64_t idx) {
  if (f.is_rational()) throw std::invalid_argument("FE::ffe: field is QQ");
  if (idx >= f.ff().q()) throw std::invalid_argument("FE::ffe: index out of range");
  FE r(f);
  r.idx_ = idx;
  return r;
}

FE FE::rat(Rational v) {
  FE r(Field::QQ());
  r.rat_ = std::move(v);
  return r;
}

bool FE::is_zero() const { return field_.is_rational() ? rat_ == 0 : idx_ == 0; }
bool FE::is_one() const { return field_.is_rational() ? rat_ == 1 : idx_ == 1; }

void FE::check_same(const FE& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("field element: mixed-field arithmetic");
}

FE FE::operator+(const FE& o) const {
  check_same(o);
  FE r(field_);
  if (field_.is_rational())
    r.rat_ = rat_ + o.rat_;
  else
    r.idx_ = field_.ff().add(idx_, o.idx_);
  return r;
}

FE FE::operator-(const FE& o) const {
  check_same(o);
  FE r(field_);
  if (field_.is_rational())
    r.rat_ = rat_ - o.rat_;
  else
    r.idx_ = field_.ff().sub(idx_, o.idx_);
  return r;
}

FE FE::operator*(const FE& o) const {
  check_same(o);
  FE r(field_);
  if (field_.is_rational())
    r.rat_ = rat_ * o.rat_;
  else
    r.idx_ = field_.ff().mul(idx_, o.idx_);
  return r;
}

FE FE::operator/(const FE& o) const {
  check_same(o);
  if (o.is_zero()) throw std::domain_error("field element: division by zero");
  FE r(field_);
  if (field_.is_rational())
    r.rat_ = rat_ / o.rat_;
  else
    r.idx_ = field_.ff().div(idx_, o.idx_);
  return r;
}

FE FE::operator-() const {
  FE r(field_);
  if (field_.is_rational())
    r.rat_ = -rat_;
  else
    r.idx_ = field_.ff().neg(idx_);
  return r;
}

FE FE::inv() const {
  if (is_zero()) throw std::domain_error("field element: inverse of zero");
  FE r(field_);
  if (field_.is_rational())
    r.rat_ = 1 / rat_;
  else
    r.idx_ = field_.ff().inv(idx_);
  return r;
}

FE FE::pow(uint64_t e) const {
  FE r(field_);
  if (field_.is_rational()) {
    Rational acc = 1, b = rat_;
    uint64_t ee = e;
    while (ee) {
      if (ee & 1) acc *= b;
      b *= b;
      ee >>= 1;
    }
    r.rat_ = acc;
  } else {
    r.idx_ = field_.ff().pow(idx_, e);
  }
  return r;
}

FE FE::frobenius(unsigned e) const {
  if (field_.is_rational()) return *this;
  FE r(field_);
  r.idx_ = field_.ff().frobenius(idx_, e);
  return r;
}

FE FE::sqrt_char2() const {
  FE r(field_);
  r.idx_ = field_.ff().sqrt_char2(idx_);
  return r;
}

std::optional<FE> FE::sqrt() const {
  if (field_.is_rational()) {
    if (rat_ < 0) return std::nullopt;
    BigInt n = boost::multiprecision::numerator(rat_);
    BigInt d = boost::multiprecision::denominator(rat_);
    BigInt sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return FE::rat(Rational(sn, sd));
  }
  auto s = field_.ff().sqrt(idx_);
  if (!s) return std::nullopt;
  return FE::ffe(field_, *s);
}

bool FE::operator==(const FE& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rational() ? rat_ == o.rat_ : idx_ == o.idx_;
}

bool FE::operator<(const FE& o) const {
  check_same(o);
  return field_.is_rational() ? rat_ < o.rat_ : idx_ < o.idx_;
}

std::string FE::str() const {
  if (field_.is_rational()) {
    std::ostringstream os;
    os << rat_;
    return os.str();
  }
  return field_.ff().elem_str(idx_);
}

FE FE::parse(const Field& f, const std::string& s) {
  if (f.is_rational()) {
    std::string t = s;
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
    auto slash = t.find('/');
    if (slash == std::string::npos) return FE::rat(Rational(BigInt(t)));
    return FE::rat(Rational(BigInt(t.substr(0, slash)), BigInt(t.substr(slash + 1))));
  }
  return FE::ffe(f, f.ff().parse_elem(s));
}

}  // namespace quartica
