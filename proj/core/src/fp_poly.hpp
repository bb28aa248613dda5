#pragma once

// Dense polynomials over Z/pZ as raw coefficient vectors, low degree first.
// Used by the field layer itself (modulus search, inversion, Frobenius
// tables) before any Poly machinery is available.

#include <cstdint>
#include <utility>
#include <vector>

#include "drinfeld/prime_field.hpp"

namespace drinfeld::detail {

using RawPoly = std::vector<std::uint32_t>;

inline void trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline RawPoly raw_mul(const RawPoly& a, const RawPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  // products are below 2^32, so lengths below 2^31 cannot overflow
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += ai * b[j];
  }
  RawPoly out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint32_t>(acc[i] % p);
  trim(out);
  return out;
}

/// a mod m for monic-or-not nonzero m; returns remainder and writes quotient if asked.
inline RawPoly raw_divmod(RawPoly a, const RawPoly& m, std::uint32_t p, RawPoly* quot = nullptr) {
  const PrimeField fp(p);
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t inv_lead = fp.inv(m.back());
  if (quot) quot->assign(a.size() > dm ? a.size() - dm : 0, 0);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint32_t c = fp.mul(a.back(), inv_lead);
    if (quot) (*quot)[shift] = c;
    const std::uint64_t nc = p - c;
    for (std::size_t k = 0; k <= dm; ++k) {
      if (m[k] == 0) continue;
      a[shift + k] = static_cast<std::uint32_t>((a[shift + k] + nc * m[k]) % p);
    }
    trim(a);
  }
  if (quot) trim(*quot);
  return a;
}

inline RawPoly raw_sub(RawPoly a, const RawPoly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p - b[i];
  trim(a);
  return a;
}

inline RawPoly raw_make_monic(RawPoly a, std::uint32_t p) {
  if (a.empty()) return a;
  const PrimeField fp(p);
  const std::uint32_t inv = fp.inv(a.back());
  for (auto& c : a) c = fp.mul(c, inv);
  return a;
}

inline RawPoly raw_gcd(RawPoly a, RawPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RawPoly r = raw_divmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return raw_make_monic(std::move(a), p);
}

/// Inverse of a modulo m, assuming gcd(a, m) = 1. Returns empty on failure.
inline RawPoly raw_inverse_mod(const RawPoly& a, const RawPoly& m, std::uint32_t p) {
  const PrimeField fp(p);
  RawPoly r0 = m, r1 = raw_divmod(a, m, p);
  RawPoly s0, s1{1};
  while (!r1.empty()) {
    RawPoly q;
    RawPoly r2 = raw_divmod(r0, r1, p, &q);
    RawPoly s2 = raw_sub(s0, raw_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) return {};
  const std::uint32_t inv = fp.inv(r0[0]);
  for (auto& c : s0) c = fp.mul(c, inv);
  return raw_divmod(s0, m, p);
}

inline RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& m, std::uint32_t p) {
  return raw_divmod(raw_mul(a, b, p), m, p);
}

template <class Exp>
RawPoly raw_powmod(RawPoly base, Exp e, const RawPoly& m, std::uint32_t p) {
  RawPoly r{1};
  r = raw_divmod(r, m, p);
  base = raw_divmod(base, m, p);
  while (e > 0) {
    if ((e & 1) != 0) r = raw_mulmod(r, base, m, p);
    e >>= 1;
    if (e > 0) base = raw_mulmod(base, base, m, p);
  }
  return r;
}

}  // namespace drinfeld::detail
