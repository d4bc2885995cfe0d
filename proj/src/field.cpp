#include "field.hpp"

#include <numeric>

namespace agcodec {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// dense GF(p) polynomials as digit vectors, constant term first
using PVec = std::vector<int>;

int pdeg(const PVec& f) {
  for (int i = int(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// remainder of f by monic g
PVec prem(PVec f, const PVec& g, int p) {
  int dg = pdeg(g);
  for (int i = pdeg(f); i >= dg && dg >= 0; i = pdeg(f)) {
    int c = f[i];
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      int& t = f[i - dg + j];
      t = ((t - c * g[j]) % p + p) % p;
    }
  }
  return f;
}

}  // namespace

Field::Field(int p, int k, std::vector<int> modulus_digits) : p_(p), k_(k) {
  if (!is_prime(p)) fail(Errc::non_prime_p, "field characteristic must be prime");
  if (k < 1) fail(Errc::degree_mismatch, "extension degree must be >= 1");
  if (modulus_digits.size() != std::size_t(k) + 1)
    fail(Errc::degree_mismatch, "modulus must have k+1 digits");
  mod_.resize(k + 1);
  for (int i = 0; i <= k; ++i) mod_[i] = ((modulus_digits[i] % p) + p) % p;
  if (mod_[k] != 1) fail(Errc::degree_mismatch, "modulus must be monic");

  long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > 1024) fail(Errc::out_of_range, "field order above the supported limit 1024");
  }
  q_ = int(q);

  // exhaustive divisor search; fields are tiny by design
  for (int d = 1; 2 * d <= k; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    PVec cand(d + 1, 0);
    cand[d] = 1;
    for (long t = 0; t < count; ++t) {
      long r = t;
      for (int i = 0; i < d; ++i) {
        cand[i] = int(r % p);
        r /= p;
      }
      if (pdeg(prem(mod_, cand, p)) < 0)
        fail(Errc::reducible_modulus, "modulus is reducible over GF(p)");
    }
  }

  auto digits = [&](int e) {
    PVec c(k);
    for (int i = 0; i < k; ++i) {
      c[i] = e % p;
      e /= p;
    }
    return c;
  };
  auto pack = [&](const PVec& c) {
    int e = 0;
    for (int i = int(c.size()) - 1; i >= 0; --i) e = e * p + c[i];
    return std::uint16_t(e);
  };

  add_.resize(std::size_t(q_) * q_);
  mul_.resize(std::size_t(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    PVec da = digits(a);
    PVec nd(k);
    for (int i = 0; i < k; ++i) nd[i] = (p - da[i]) % p;
    neg_[a] = pack(nd);
    for (int b = 0; b < q_; ++b) {
      PVec db = digits(b);
      PVec s(k);
      for (int i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
      add_[std::size_t(a) * q_ + b] = pack(s);
      PVec prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      PVec rem = prem(prod, mod_, p);
      rem.resize(k);
      mul_[std::size_t(a) * q_ + b] = pack(rem);
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[std::size_t(a) * q_ + b] == 1) {
        inv_[a] = std::uint16_t(b);
        break;
      }
}

Fel Field::element(long enc) const {
  if (enc < 0 || enc >= q_) fail(Errc::out_of_range, "element encoding outside [0, q)");
  return {std::uint16_t(enc)};
}

std::vector<Fel> Field::elements() const {
  std::vector<Fel> out(q_);
  for (int e = 0; e < q_; ++e) out[e] = {std::uint16_t(e)};
  return out;
}

Fel Field::inv(Fel a) const {
  if (a.v == 0) fail(Errc::division_by_zero, "inverse of zero");
  return {inv_[a.v]};
}

Fel Field::pow(Fel a, long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Fel r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::string Field::name() const {
  long m = 0;
  for (int i = k_; i >= 0; --i) m = m * p_ + mod_[i];
  return std::to_string(p_) + "^" + std::to_string(k_) + "/" + std::to_string(m);
}

}  // namespace agcodec
