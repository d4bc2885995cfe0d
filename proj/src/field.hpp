#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace agcodec {

// Element of a finite field in its canonical integer encoding: the
// polynomial-basis coordinates c_0..c_{k-1} packed base p,
// enc = c_0 + c_1*p + ... + c_{k-1}*p^{k-1}.
struct Fel {
  std::uint16_t v = 0;
  friend constexpr auto operator<=>(const Fel&, const Fel&) = default;
};

/// Exact arithmetic in GF(p^k). The modulus is a monic irreducible polynomial
/// over GF(p) given as k+1 base-p digits, constant term first; primality of p
/// and irreducibility of the modulus are verified at construction by brute
/// force. Intended for small fields (q <= 64 in practice, hard cap 1024);
/// all operations go through precomputed tables.
class Field {
 public:
  Field(int p, int k, std::vector<int> modulus_digits);
  static Field prime_field(int p) { return Field(p, 1, {0, 1}); }

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return mod_; }
  std::string name() const;  // "p^k/m" with m the packed modulus digits

  Fel zero() const { return {0}; }
  Fel one() const { return {1}; }
  Fel element(long enc) const;        // range-checked
  std::vector<Fel> elements() const;  // all q elements, ascending enc

  Fel add(Fel a, Fel b) const { return {add_[idx(a, b)]}; }
  Fel sub(Fel a, Fel b) const { return add(a, neg(b)); }
  Fel neg(Fel a) const { return {neg_[a.v]}; }
  Fel mul(Fel a, Fel b) const { return {mul_[idx(a, b)]}; }
  Fel inv(Fel a) const;
  Fel div(Fel a, Fel b) const { return mul(a, inv(b)); }
  Fel pow(Fel a, long e) const;  // square-and-multiply; e < 0 inverts first

  bool operator==(const Field& o) const { return p_ == o.p_ && mod_ == o.mod_; }

 private:
  std::size_t idx(Fel a, Fel b) const { return std::size_t(a.v) * q_ + b.v; }

  int p_ = 0, k_ = 0, q_ = 0;
  std::vector<int> mod_;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
};

}  // namespace agcodec
