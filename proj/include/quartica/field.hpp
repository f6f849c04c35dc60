#pragma once
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quartica {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// GF(p^k) with the modulus fixed deterministically: the monic irreducible of
// degree k over GF(p) that is smallest in lexicographic order on coefficient
// vectors read from the t^(k-1) coefficient down to the constant term.
// Elements are encoded as integers in [0, p^k): little-endian base-p digits
// give the coefficients of the representative polynomial in t.
class FiniteField {
 public:
  static std::shared_ptr<const FiniteField> make(uint64_t p, unsigned k);
  static std::shared_ptr<const FiniteField> make(uint64_t p, unsigned k,
                                                 std::vector<uint32_t> modulus);

  uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  uint64_t q() const { return q_; }
  // little-endian, size k+1, monic
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t sub(uint64_t a, uint64_t b) const;
  uint64_t neg(uint64_t a) const;
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t inv(uint64_t a) const;
  uint64_t div(uint64_t a, uint64_t b) const;
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t from_int(long long n) const;

  // a |-> a^(p^e)
  uint64_t frobenius(uint64_t a, unsigned e = 1) const;
  // unique square root in characteristic 2: a^(2^(k-1))
  uint64_t sqrt_char2(uint64_t a) const;
  // square root in any characteristic if one exists
  std::optional<uint64_t> sqrt(uint64_t a) const;

  std::string name() const;                    // "GF(p^k)"
  std::string elem_str(uint64_t a) const;      // "[c0,c1,...]"
  uint64_t parse_elem(const std::string& s) const;

  bool same(const FiniteField& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

  // image of `a` under the canonical embedding `from` -> `into`
  // (same p, from.k | into.k; generator maps to the smallest root of
  // from.modulus in `into`, smallest in element-index order)
  static uint64_t embed(const FiniteField& from, uint64_t a,
                        const FiniteField& into);

 private:
  FiniteField() = default;
  void build_tables();
  uint64_t mul_nocache(uint64_t a, uint64_t b) const;

  uint64_t p_ = 0;
  unsigned k_ = 0;
  uint64_t q_ = 0;
  std::vector<uint32_t> modulus_;
  // discrete log tables when q is small enough; exp_ has length 2(q-1) so
  // products of logs index without a reduction
  std::vector<uint32_t> exp_, log_;
  bool tables_ = false;
};

using FFPtr = std::shared_ptr<const FiniteField>;

// Coefficient domain descriptor: a finite field or the rationals.
class Field {
 public:
  Field() = default;  // rationals
  static Field QQ() { return Field(); }
  static Field GF(uint64_t p, unsigned k = 1) { return Field(FiniteField::make(p, k)); }
  explicit Field(FFPtr ff) : ff_(std::move(ff)) {}
  static Field parse(const std::string& s);  // "GF(p^k)" | "GF(p)" | "QQ"

  bool is_rational() const { return !ff_; }
  bool is_finite() const { return static_cast<bool>(ff_); }
  uint64_t characteristic() const { return ff_ ? ff_->p() : 0; }
  const FiniteField& ff() const;
  FFPtr ff_ptr() const { return ff_; }
  std::string name() const;

  bool operator==(const Field& o) const;
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  FFPtr ff_;  // null => QQ
};

// An element of a Field.  Finite-field values live in idx_, rational values
// in rat_; the unused slot stays at its default.
class FE {
 public:
  FE() : field_(Field::QQ()) {}
  static FE zero(const Field& f);
  static FE one(const Field& f);
  static FE of_int(const Field& f, long long n);
  static FE ffe(const Field& f, uint64_t idx);
  static FE rat(Rational r);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  uint64_t idx() const { return idx_; }
  const Rational& rational() const { return rat_; }

  FE operator+(const FE& o) const;
  FE operator-(const FE& o) const;
  FE operator*(const FE& o) const;
  FE operator/(const FE& o) const;
  FE operator-() const;
  FE& operator+=(const FE& o) { return *this = *this + o; }
  FE& operator-=(const FE& o) { return *this = *this - o; }
  FE& operator*=(const FE& o) { return *this = *this * o; }
  FE inv() const;
  FE pow(uint64_t e) const;
  FE frobenius(unsigned e = 1) const;
  FE sqrt_char2() const;
  std::optional<FE> sqrt() const;

  bool operator==(const FE& o) const;
  bool operator!=(const FE& o) const { return !(*this == o); }
  // a total order usable as a deterministic tiebreak (not algebraic)
  bool operator<(const FE& o) const;

  std::string str() const;
  static FE parse(const Field& f, const std::string& s);

 private:
  explicit FE(Field f) : field_(std::move(f)) {}
  void check_same(const FE& o) const;

  Field field_;
  uint64_t idx_ = 0;
  Rational rat_;
};

}  // namespace quartica
