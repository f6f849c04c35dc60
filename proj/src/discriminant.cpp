#include "quartica/discriminant.hpp"

#include <stdexcept>
#include <unordered_map>

namespace quartica {

namespace {

// determinant of a matrix of sparse polynomials by minor expansion over
// column subsets (rows consumed top to bottom, memoized on the column mask)
MultiPoly det_poly(const std::vector<std::vector<MultiPoly>>& a, const Field& F,
                   unsigned nvars) {
  const unsigned n = static_cast<unsigned>(a.size());
  std::unordered_map<uint32_t, MultiPoly> memo;
  const uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);

  std::function<MultiPoly(uint32_t)> go = [&](uint32_t mask) -> MultiPoly {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    unsigned row = n - static_cast<unsigned>(__builtin_popcount(mask));
    MultiPoly acc(F, nvars);
    if (mask == 0) {
      acc = MultiPoly::constant(F, nvars, FE::one(F));
    } else {
      int sign = 1;
      for (unsigned col = 0; col < n; ++col) {
        if (!(mask & (1u << col))) continue;
        if (!a[row][col].is_zero()) {
          MultiPoly sub = go(mask & ~(1u << col));
          MultiPoly piece = a[row][col] * sub;
          acc = (sign > 0) ? acc + piece : acc - piece;
        }
        sign = -sign;
      }
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return go(full);
}

}  // namespace

MultiPoly universal_discriminant(unsigned d, bool char2) {
  if (d < 2 || d > 6)
    throw std::invalid_argument("universal_discriminant: degree must be between 2 and 6");
  const Field Q = Field::QQ();
  const unsigned nvars = d + 1;  // a0..ad
  auto A = [&](unsigned j) { return MultiPoly::var(Q, nvars, j); };

  const unsigned N = 2 * d - 1;
  std::vector<std::vector<MultiPoly>> m(N, std::vector<MultiPoly>(N, MultiPoly::zero(Q, nvars)));
  // d-1 shifted rows of f = sum a_j s^(d-j), then d rows of df/ds
  for (unsigned r = 0; r < d - 1; ++r)
    for (unsigned j = 0; j <= d; ++j) m[r][r + j] = A(j);
  for (unsigned r = 0; r < d; ++r)
    for (unsigned j = 0; j < d; ++j)
      m[d - 1 + r][r + j] = A(j).scale(FE::of_int(Q, static_cast<long long>(d - j)));

  MultiPoly res = det_poly(m, Q, nvars);
  Mono a0(nvars, 0);
  a0[0] = 1;
  MultiPoly disc = res.divide_by_monomial(a0);
  if ((d * (d - 1) / 2) % 2) disc = -disc;

  if (!char2) return disc;
  const Field F2 = Field::GF(2);
  return disc.map_field(F2, [&](const FE& c) {
    BigInt num = boost::multiprecision::numerator(c.rational());
    BigInt den = boost::multiprecision::denominator(c.rational());
    if (den != 1) throw std::logic_error("universal_discriminant: non-integer coefficient");
    return FE::of_int(F2, static_cast<long long>(num % 2));
  });
}

MultiPoly disc_sqrt_char2(unsigned d) {
  MultiPoly D = universal_discriminant(d, true);
  auto root = D.sqrt();
  if (!root)
    throw std::logic_error("disc_sqrt_char2: discriminant mod 2 is not a perfect square");
  return *root;
}

}  // namespace quartica
