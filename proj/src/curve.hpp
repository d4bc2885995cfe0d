#pragma once

#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "field.hpp"

namespace agcodec {

// univariate polynomial over F, coefficient of x^i at index i, trailing zeros trimmed
using XPoly = std::vector<Fel>;

using Point = std::pair<Fel, Fel>;

namespace xp {

int deg(const XPoly& f);  // -1 for the zero polynomial
void trim(XPoly& f);
bool is_zero(const XPoly& f);
Fel coeff(const XPoly& f, long i);
Fel lc(const XPoly& f);  // zero for the zero polynomial
XPoly add(const Field& F, const XPoly& f, const XPoly& g);
XPoly sub(const Field& F, const XPoly& f, const XPoly& g);
XPoly scaled(const Field& F, Fel c, const XPoly& f);
XPoly mul(const Field& F, const XPoly& f, const XPoly& g);
XPoly shifted(const XPoly& f, long k);  // f * x^k
Fel eval(const Field& F, const XPoly& f, Fel x);

}  // namespace xp

// element of R = F[x,y] / (E), stored as a free F[x]-module of rank a:
// rows[j] is the coefficient of y^j, 0 <= j < a
struct RingElem {
  std::vector<XPoly> rows;
  friend bool operator==(const RingElem&, const RingElem&) = default;
};

// element zpart*z + cpart of Rz + R
struct PairElem {
  RingElem zpart, cpart;
  friend bool operator==(const PairElem&, const PairElem&) = default;
};

// monomial x^xdeg y^ydeg z^(has_z), ydeg < a
struct Mono {
  bool has_z = false;
  int ydeg = 0;
  long xdeg = 0;
  friend bool operator==(const Mono&, const Mono&) = default;
};

struct Term {
  Mono mono;
  Fel coeff;
};

// delta(0); ordered below every pole order, never used in arithmetic
inline constexpr long long kNegInfDelta = std::numeric_limits<long long>::min();

/// Plane curve y^a + sum_{ai+bj<ab} c_{ij} x^i y^j + c x^b = 0 with gcd(a,b)=1
/// and a single place at infinity where x and y have pole orders a and b.
/// Provides arithmetic in the coordinate ring R (reduced to y-degree < a), the
/// weighted orders >_delta on R and >_s on Rz+R (ties broken z > y > x), the
/// pole-order semigroup S = {ia + jb}, and the nonsingular affine points.
class Curve {
 public:
  Curve(Field f, int a, int b, const std::map<std::pair<long, int>, Fel>& coeffs, Fel c);
  static Curve hermitian(Field f, int q);  // y^q + y = x^{q+1} over GF(q^2)

  const Field& field() const { return f_; }
  int a() const { return a_; }
  int b() const { return b_; }
  bool is_hermitian() const;
  long genus() const { return long(a_ - 1) * (b_ - 1) / 2; }

  // elements of R
  RingElem zero_elem() const { return RingElem{std::vector<XPoly>(a_)}; }
  RingElem one_elem() const { return monomial(0, 0, f_.one()); }
  RingElem monomial(long xdeg, int ydeg, Fel c) const;
  RingElem make(std::vector<XPoly> rows) const;  // pads/validates to a rows
  bool is_zero(const RingElem& f) const;
  RingElem add(const RingElem& f, const RingElem& g) const;
  RingElem sub(const RingElem& f, const RingElem& g) const;
  RingElem neg(const RingElem& f) const;
  RingElem scaled(Fel c, const RingElem& f) const;
  RingElem mul(const RingElem& f, const RingElem& g) const;
  RingElem mul_xpoly(const XPoly& f, const RingElem& g) const;  // F[x]-module action
  RingElem shifted_x(const RingElem& f, long k) const;
  long long delta(const RingElem& f) const;  // kNegInfDelta for 0
  Term lt(const RingElem& f) const;          // leading term under >_delta

  // elements of Rz + R
  PairElem pair_zero() const { return {zero_elem(), zero_elem()}; }
  bool is_zero(const PairElem& F) const { return is_zero(F.zpart) && is_zero(F.cpart); }
  PairElem add(const PairElem& F, const PairElem& G) const;
  PairElem sub(const PairElem& F, const PairElem& G) const;
  PairElem scaled(Fel c, const PairElem& F) const;
  PairElem shifted_x(const PairElem& F, long k) const;
  long long delta_s(const Mono& m, long s) const;
  int cmp_s(const Mono& m1, const Mono& m2, long s) const;  // -1, 0, 1 under >_s
  Term lt_s(const PairElem& F, long s) const;               // throws ZeroElement
  PairElem subst_z(const PairElem& F, Fel w, long s) const;  // z -> z + w*phi_s

  // semigroup of pole orders at infinity
  bool is_gap(long s) const;
  Mono phi(long s) const;  // the monomial of pole order s; throws GapValue
  RingElem phi_elem(long s, Fel c) const;
  std::vector<long> nongaps_upto(long u) const;
  int residue_class(long m) const;  // the j in [0,a) with b*j = m (mod a)

  // affine rational points
  std::vector<Point> points() const;  // nonsingular, ordered by (enc x, enc y)
  bool on_curve(Point P) const;
  bool nonsingular(Point P) const;
  Fel eval(const RingElem& f, Point P) const;
  Fel eval_pair(const PairElem& F, Point P, Fel zval) const;

 private:
  Fel eval_equation(Fel x, Fel y) const;

  Field f_;
  int a_, b_;
  std::vector<std::pair<std::pair<long, int>, Fel>> coeffs_;  // (i,j) -> c_{ij}
  Fel c_;
  long binv_ = 0;                // b^{-1} mod a (0 when a == 1)
  std::vector<RingElem> ypow_;   // y^m reduced, 0 <= m <= 2(a-1)
};

}  // namespace agcodec
