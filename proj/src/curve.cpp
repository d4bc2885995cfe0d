#include "curve.hpp"

#include <algorithm>
#include <numeric>

namespace agcodec {

namespace xp {

int deg(const XPoly& f) {
  for (int i = int(f.size()) - 1; i >= 0; --i)
    if (f[i].v != 0) return i;
  return -1;
}

void trim(XPoly& f) { f.resize(deg(f) + 1); }

bool is_zero(const XPoly& f) { return deg(f) < 0; }

Fel coeff(const XPoly& f, long i) {
  if (i < 0 || i >= long(f.size())) return {0};
  return f[i];
}

Fel lc(const XPoly& f) {
  int d = deg(f);
  return d < 0 ? Fel{0} : f[d];
}

XPoly add(const Field& F, const XPoly& f, const XPoly& g) {
  XPoly r(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(coeff(f, i), coeff(g, i));
  trim(r);
  return r;
}

XPoly sub(const Field& F, const XPoly& f, const XPoly& g) {
  XPoly r(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(coeff(f, i), coeff(g, i));
  trim(r);
  return r;
}

XPoly scaled(const Field& F, Fel c, const XPoly& f) {
  if (c.v == 0) return {};
  XPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = F.mul(c, f[i]);
  trim(r);
  return r;
}

XPoly mul(const Field& F, const XPoly& f, const XPoly& g) {
  if (is_zero(f) || is_zero(g)) return {};
  XPoly r(f.size() + g.size() - 1, {0});
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].v == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(f[i], g[j]));
  }
  trim(r);
  return r;
}

XPoly shifted(const XPoly& f, long k) {
  if (is_zero(f)) return {};
  XPoly r(f.size() + k, {0});
  std::copy(f.begin(), f.end(), r.begin() + k);
  return r;
}

Fel eval(const Field& F, const XPoly& f, Fel x) {
  Fel acc{0};
  for (int i = int(f.size()) - 1; i >= 0; --i) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

}  // namespace xp

namespace {

long mod_inverse(long b, long a) {  // b^{-1} mod a, gcd(a,b) == 1
  if (a == 1) return 0;
  long r0 = a, r1 = b % a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  return ((t0 % a) + a) % a;
}

}  // namespace

Curve::Curve(Field f, int a, int b, const std::map<std::pair<long, int>, Fel>& coeffs, Fel c)
    : f_(std::move(f)), a_(a), b_(b), c_(c) {
  if (a < 1 || b < 1) fail(Errc::bad_config, "curve weights must be positive");
  if (std::gcd(a, b) != 1) fail(Errc::bad_config, "curve weights a, b must be coprime");
  if (c.v == 0) fail(Errc::bad_config, "coefficient of x^b must be nonzero");
  for (const auto& [ij, cv] : coeffs) {
    auto [i, j] = ij;
    if (i < 0 || j < 0 || j >= a || i * a + long(j) * b >= long(a) * b)
      fail(Errc::bad_config, "curve coefficient term outside a*i + b*j < a*b, j < a");
    if (cv.v != 0) coeffs_.emplace_back(ij, cv);
  }
  binv_ = mod_inverse(b % a == 0 ? 1 : b % a, a);  // a == 1 handled inside

  // y^a = -c x^b - sum c_{ij} x^i y^j, then y^m for m up to 2(a-1)
  ypow_.resize(std::max(2 * a - 1, a));
  for (int m = 0; m < a; ++m) ypow_[m] = monomial(0, m, f_.one());
  if (2 * a - 2 >= a) {
    RingElem red = zero_elem();
    red.rows[0] = xp::shifted({f_.neg(c_)}, b_);
    for (const auto& [ij, cv] : coeffs_) {
      RingElem t = monomial(ij.first, ij.second, f_.neg(cv));
      red = add(red, t);
    }
    ypow_[a] = red;
    for (int m = a + 1; m <= 2 * a - 2; ++m) {
      const RingElem& prev = ypow_[m - 1];
      RingElem r = zero_elem();
      for (int j = 0; j + 1 < a; ++j) r.rows[j + 1] = prev.rows[j];
      if (!xp::is_zero(prev.rows[a - 1]))
        r = add(r, mul_xpoly(prev.rows[a - 1], ypow_[a]));
      ypow_[m] = r;
    }
  }
}

Curve Curve::hermitian(Field f, int q) {
  if (q < 2) fail(Errc::bad_config, "hermitian curve needs q >= 2");
  if (f.q() != q * q) fail(Errc::field_order_mismatch, "hermitian curve over GF(q^2) requires field order q^2");
  std::map<std::pair<long, int>, Fel> coeffs{{{0, 1}, f.one()}};
  Fel c = f.neg(f.one());
  return Curve(std::move(f), q, q + 1, coeffs, c);
}

bool Curve::is_hermitian() const {
  return a_ >= 2 && b_ == a_ + 1 && f_.q() == a_ * a_ && coeffs_.size() == 1 &&
         coeffs_[0].first == std::pair<long, int>{0, 1} && coeffs_[0].second == f_.one() &&
         c_ == f_.neg(f_.one());
}

RingElem Curve::monomial(long xdeg, int ydeg, Fel c) const {
  if (ydeg < 0 || ydeg >= a_) fail(Errc::out_of_range, "monomial y-degree outside [0, a)");
  if (xdeg < 0) fail(Errc::out_of_range, "negative x-degree");
  RingElem r = zero_elem();
  if (c.v != 0) r.rows[ydeg] = xp::shifted({c}, xdeg);
  return r;
}

RingElem Curve::make(std::vector<XPoly> rows) const {
  if (rows.size() > std::size_t(a_)) fail(Errc::out_of_range, "too many rows for rank-a module");
  rows.resize(a_);
  for (auto& r : rows) xp::trim(r);
  return RingElem{std::move(rows)};
}

bool Curve::is_zero(const RingElem& f) const {
  for (const auto& r : f.rows)
    if (!xp::is_zero(r)) return false;
  return true;
}

RingElem Curve::add(const RingElem& f, const RingElem& g) const {
  RingElem r = zero_elem();
  for (int j = 0; j < a_; ++j) r.rows[j] = xp::add(f_, f.rows[j], g.rows[j]);
  return r;
}

RingElem Curve::sub(const RingElem& f, const RingElem& g) const {
  RingElem r = zero_elem();
  for (int j = 0; j < a_; ++j) r.rows[j] = xp::sub(f_, f.rows[j], g.rows[j]);
  return r;
}

RingElem Curve::neg(const RingElem& f) const { return sub(zero_elem(), f); }

RingElem Curve::scaled(Fel c, const RingElem& f) const {
  RingElem r = zero_elem();
  for (int j = 0; j < a_; ++j) r.rows[j] = xp::scaled(f_, c, f.rows[j]);
  return r;
}

RingElem Curve::mul_xpoly(const XPoly& f, const RingElem& g) const {
  RingElem r = zero_elem();
  for (int j = 0; j < a_; ++j) r.rows[j] = xp::mul(f_, f, g.rows[j]);
  return r;
}

RingElem Curve::shifted_x(const RingElem& f, long k) const {
  RingElem r = zero_elem();
  for (int j = 0; j < a_; ++j) r.rows[j] = xp::shifted(f.rows[j], k);
  return r;
}

RingElem Curve::mul(const RingElem& f, const RingElem& g) const {
  std::vector<XPoly> acc(2 * a_ - 1);
  for (int j1 = 0; j1 < a_; ++j1) {
    if (xp::is_zero(f.rows[j1])) continue;
    for (int j2 = 0; j2 < a_; ++j2) {
      if (xp::is_zero(g.rows[j2])) continue;
      acc[j1 + j2] = xp::add(f_, acc[j1 + j2], xp::mul(f_, f.rows[j1], g.rows[j2]));
    }
  }
  RingElem r = zero_elem();
  for (int j = 0; j < a_; ++j) r.rows[j] = std::move(acc[j]);
  for (int m = a_; m <= 2 * a_ - 2; ++m)
    if (!xp::is_zero(acc[m])) r = add(r, mul_xpoly(acc[m], ypow_[m]));
  return r;
}

long long Curve::delta(const RingElem& f) const {
  long long best = kNegInfDelta;
  for (int j = 0; j < a_; ++j) {
    int d = xp::deg(f.rows[j]);
    if (d < 0) continue;
    best = std::max(best, (long long)a_ * d + (long long)b_ * j);
  }
  return best;
}

Term Curve::lt(const RingElem& f) const {
  int bj = -1;
  long long best = kNegInfDelta;
  for (int j = 0; j < a_; ++j) {
    int d = xp::deg(f.rows[j]);
    if (d < 0) continue;
    long long dd = (long long)a_ * d + (long long)b_ * j;
    if (dd > best) {  // pole orders of distinct (x^i y^j), j < a, never tie
      best = dd;
      bj = j;
    }
  }
  if (bj < 0) fail(Errc::zero_element, "leading term of the zero element");
  return Term{Mono{false, bj, xp::deg(f.rows[bj])}, xp::lc(f.rows[bj])};
}

PairElem Curve::add(const PairElem& F, const PairElem& G) const {
  return {add(F.zpart, G.zpart), add(F.cpart, G.cpart)};
}

PairElem Curve::sub(const PairElem& F, const PairElem& G) const {
  return {sub(F.zpart, G.zpart), sub(F.cpart, G.cpart)};
}

PairElem Curve::scaled(Fel c, const PairElem& F) const {
  return {scaled(c, F.zpart), scaled(c, F.cpart)};
}

PairElem Curve::shifted_x(const PairElem& F, long k) const {
  return {shifted_x(F.zpart, k), shifted_x(F.cpart, k)};
}

long long Curve::delta_s(const Mono& m, long s) const {
  return (long long)a_ * m.xdeg + (long long)b_ * m.ydeg + (m.has_z ? s : 0);
}

int Curve::cmp_s(const Mono& m1, const Mono& m2, long s) const {
  long long d1 = delta_s(m1, s), d2 = delta_s(m2, s);
  if (d1 != d2) return d1 < d2 ? -1 : 1;
  if (m1.has_z != m2.has_z) return m1.has_z ? 1 : -1;
  if (m1.ydeg != m2.ydeg) return m1.ydeg < m2.ydeg ? -1 : 1;
  return 0;  // equal weights, z and y degrees force equal x-degree
}

Term Curve::lt_s(const PairElem& F, long s) const {
  bool zz = is_zero(F.zpart), cz = is_zero(F.cpart);
  if (zz && cz) fail(Errc::zero_element, "leading term of the zero element");
  if (zz) return lt(F.cpart);
  Term tz = lt(F.zpart);
  tz.mono.has_z = true;
  if (cz) return tz;
  Term tc = lt(F.cpart);
  return cmp_s(tz.mono, tc.mono, s) > 0 ? tz : tc;
}

PairElem Curve::subst_z(const PairElem& F, Fel w, long s) const {
  if (w.v == 0) return F;
  RingElem shift = scaled(w, mul(F.zpart, phi_elem(s, f_.one())));
  return {F.zpart, add(F.cpart, shift)};
}

int Curve::residue_class(long m) const {
  if (a_ == 1) return 0;
  return int((((m % a_) + a_) % a_) * binv_ % a_);
}

bool Curve::is_gap(long s) const {
  if (s < 0) return true;
  int j = residue_class(s);
  return s < (long)b_ * j;
}

Mono Curve::phi(long s) const {
  if (is_gap(s)) fail(Errc::gap_value, "no monomial of pole order " + std::to_string(s));
  int j = residue_class(s);
  return Mono{false, j, (s - (long)b_ * j) / a_};
}

RingElem Curve::phi_elem(long s, Fel c) const {
  Mono m = phi(s);
  return monomial(m.xdeg, m.ydeg, c);
}

std::vector<long> Curve::nongaps_upto(long u) const {
  std::vector<long> out;
  for (long s = 0; s <= u; ++s)
    if (!is_gap(s)) out.push_back(s);
  return out;
}

Fel Curve::eval_equation(Fel x, Fel y) const {
  Fel v = f_.pow(y, a_);
  v = f_.add(v, f_.mul(c_, f_.pow(x, b_)));
  for (const auto& [ij, cv] : coeffs_)
    v = f_.add(v, f_.mul(cv, f_.mul(f_.pow(x, ij.first), f_.pow(y, ij.second))));
  return v;
}

bool Curve::on_curve(Point P) const { return eval_equation(P.first, P.second).v == 0; }

bool Curve::nonsingular(Point P) const {
  auto [x, y] = P;
  int p = f_.p();
  auto scalar = [&](long t) { return f_.element(((t % p) + p) % p); };
  // dE/dx
  Fel dx = f_.mul(f_.mul(c_, scalar(b_)), f_.pow(x, b_ - 1));
  for (const auto& [ij, cv] : coeffs_) {
    auto [i, j] = ij;
    if (i == 0) continue;
    dx = f_.add(dx, f_.mul(f_.mul(cv, scalar(i)), f_.mul(f_.pow(x, i - 1), f_.pow(y, j))));
  }
  if (dx.v != 0) return true;
  // dE/dy
  Fel dy = f_.mul(scalar(a_), f_.pow(y, a_ - 1));
  for (const auto& [ij, cv] : coeffs_) {
    auto [i, j] = ij;
    if (j == 0) continue;
    dy = f_.add(dy, f_.mul(f_.mul(cv, scalar(j)), f_.mul(f_.pow(x, i), f_.pow(y, j - 1))));
  }
  return dy.v != 0;
}

std::vector<Point> Curve::points() const {
  std::vector<Point> out;
  for (Fel x : f_.elements())
    for (Fel y : f_.elements()) {
      Point P{x, y};
      if (on_curve(P) && nonsingular(P)) out.push_back(P);
    }
  return out;
}

Fel Curve::eval(const RingElem& f, Point P) const {
  Fel acc{0};
  for (int j = a_ - 1; j >= 0; --j)
    acc = f_.add(f_.mul(acc, P.second), xp::eval(f_, f.rows[j], P.first));
  return acc;
}

Fel Curve::eval_pair(const PairElem& F, Point P, Fel zval) const {
  return f_.add(f_.mul(eval(F.zpart, P), zval), eval(F.cpart, P));
}

}  // namespace agcodec
