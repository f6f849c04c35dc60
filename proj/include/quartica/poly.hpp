#pragma once
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quartica/field.hpp"

namespace quartica {

using Mono = std::vector<uint16_t>;

inline unsigned mono_degree(const Mono& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

// graded lexicographic, variables in declaration order (x0 largest)
struct GradedLex {
  bool operator()(const Mono& a, const Mono& b) const {
    unsigned da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

class MultiPoly {
 public:
  MultiPoly(Field f, unsigned nvars) : field_(std::move(f)), nvars_(nvars) {}
  static MultiPoly zero(const Field& f, unsigned nvars) { return MultiPoly(f, nvars); }
  static MultiPoly constant(const Field& f, unsigned nvars, const FE& c);
  static MultiPoly var(const Field& f, unsigned nvars, unsigned i, unsigned e = 1);

  const Field& field() const { return field_; }
  unsigned nvars() const { return nvars_; }
  bool is_zero() const { return t_.empty(); }
  size_t num_terms() const { return t_.size(); }
  int total_degree() const;
  bool is_homogeneous(int* deg = nullptr) const;

  void add_term(const Mono& m, const FE& c);  // accumulates
  FE coeff(const Mono& m) const;
  const std::map<Mono, FE, GradedLex>& terms() const { return t_; }
  std::pair<Mono, FE> leading_term() const;  // graded-lex max; poly must be nonzero

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scale(const FE& c) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly partial(unsigned var) const;
  FE eval(const std::vector<FE>& point) const;
  // substitute x_i -> images[i]; all images share a ring with `nvars_out` vars
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  // coefficient-wise transport into another field
  MultiPoly map_field(const Field& target, const std::function<FE(const FE&)>& fn) const;

  std::optional<MultiPoly> divide_exact(const MultiPoly& g) const;
  MultiPoly reduce_mod(const MultiPoly& g) const;
  std::optional<MultiPoly> sqrt() const;  // exact polynomial square root

  Mono content_monomial() const;  // min exponent vector; poly must be nonzero
  MultiPoly divide_by_monomial(const Mono& m) const;

  std::string str() const;
  static MultiPoly parse(const Field& f, unsigned nvars, const std::string& s);

 private:
  Field field_;
  unsigned nvars_;
  std::map<Mono, FE, GradedLex> t_;
};

class UniPoly {
 public:
  explicit UniPoly(Field f) : field_(std::move(f)) {}
  UniPoly(Field f, std::vector<FE> coeffs);  // low -> high, trimmed on construction

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FE coeff(size_t i) const;  // zero beyond degree
  const std::vector<FE>& coeffs() const { return c_; }
  FE lc() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scale(const FE& c) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly derivative() const;
  FE eval(const FE& x) const;
  UniPoly make_monic(FE* unit = nullptr) const;
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  static UniPoly gcd(UniPoly a, UniPoly b);  // monic (or zero)
  std::optional<UniPoly> pth_root() const;   // finite field char p

 private:
  void trim();
  Field field_;
  std::vector<FE> c_;
};

// degree-d binary form in (s,t): coeffs[i] is the coefficient of s^(d-i) t^i
class BinaryForm {
 public:
  BinaryForm(Field f, std::vector<FE> coeffs);
  static BinaryForm zero(const Field& f, unsigned degree);

  const Field& field() const { return field_; }
  unsigned degree() const { return static_cast<unsigned>(c_.size()) - 1; }
  bool is_zero() const;
  const FE& coeff(size_t i) const { return c_[i]; }
  const std::vector<FE>& coeffs() const { return c_; }

  FE eval(const FE& s, const FE& t) const;
  BinaryForm operator*(const BinaryForm& o) const;
  BinaryForm scale(const FE& c) const;
  BinaryForm pow(unsigned e) const;
  bool operator==(const BinaryForm& o) const;

  std::string str() const;  // in variables s,t

 private:
  Field field_;
  std::vector<FE> c_;
};

struct SquarefreeDecomposition {
  // pairwise-coprime squarefree forms with multiplicities; unit * prod(form^mult)
  // reproduces the input exactly
  std::vector<std::pair<BinaryForm, unsigned>> factors;
  FE unit;
};

SquarefreeDecomposition squarefree_decomposition(const BinaryForm& f);

// root multiplicities over the algebraic closure, sorted descending, e.g. {2,2}
std::vector<unsigned> multiplicity_signature(const BinaryForm& f);

// the exact square root over the coefficient field, when one exists
std::optional<BinaryForm> square_root_form(const BinaryForm& f);
inline bool is_square_form(const BinaryForm& f) { return square_root_form(f).has_value(); }

// squarefree decomposition of a univariate polynomial (monic factors)
std::vector<std::pair<UniPoly, unsigned>> squarefree_univariate(const UniPoly& f);

// Res(f,g) for binary forms of their formal degrees (Sylvester determinant)
FE resultant(const BinaryForm& f, const BinaryForm& g);

// restriction of a homogeneous form to the line spanned by points a, b:
// returns F(s*a + t*b) as a binary form of the same degree
BinaryForm restrict_to_line(const MultiPoly& F, const std::vector<FE>& a,
                            const std::vector<FE>& b);

}  // namespace quartica
