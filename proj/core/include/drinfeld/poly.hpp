#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/finite_field.hpp"

namespace drinfeld {

/// Polynomial degree with deg(0) = -infinity.
class Degree {
 public:
  constexpr Degree(long v) : v_(v) {}  // NOLINT: implicit from integers is intended
  static constexpr Degree neg_inf() { return Degree(kNegInf, 0); }

  constexpr bool is_neg_inf() const noexcept { return v_ == kNegInf; }
  /// Throws DomainError for -infinity.
  long value() const;

  friend constexpr auto operator<=>(Degree a, Degree b) = default;
  friend constexpr Degree operator+(Degree a, Degree b) {
    return a.is_neg_inf() || b.is_neg_inf() ? neg_inf() : Degree(a.v_ + b.v_);
  }
  std::string str() const;

 private:
  static constexpr long kNegInf = std::numeric_limits<long>::min();
  constexpr Degree(long v, int) : v_(v) {}
  long v_;
};

/// Dense univariate polynomial over a registered finite field, low degree
/// first. With the base field F_q this models A = F_q[T]; the same type serves
/// for polynomials over residue fields and splitting fields.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldId f) : field_(f) {}
  Poly(FieldId f, std::vector<FFElem> coeffs);

  static Poly constant(const FFElem& c);
  static Poly constant(FieldId f, std::int64_t v);
  static Poly monomial(const FFElem& c, std::size_t k);
  /// The variable itself.
  static Poly x(FieldId f);
  /// Prime-field integer coefficients, low degree first.
  static Poly from_ints(FieldId f, std::initializer_list<std::int64_t> low_first);
  static Poly from_ints(FieldId f, const std::vector<std::int64_t>& low_first);

  FieldId field() const noexcept { return field_; }
  Degree degree() const noexcept;
  /// Degree as an integer with -1 for zero. Internal convenience.
  long deg() const noexcept { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const noexcept { return c_.size(); }

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }

  const std::vector<FFElem>& coeffs() const noexcept { return c_; }
  /// Coefficient of x^i, zero beyond the degree.
  FFElem coeff(std::size_t i) const;
  /// Throws DomainError on the zero polynomial.
  const FFElem& leading() const;

  Poly monic() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const FFElem& c) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  /// Euclidean quotient and remainder; throws on division by zero.
  Poly operator/(const Poly& o) const;
  Poly operator%(const Poly& o) const;

  Poly shifted(std::size_t k) const;
  Poly derivative() const;
  Poly pow(std::uint64_t e) const;
  /// Evaluates at x, which may lie in any extension of field().
  FFElem eval(const FFElem& x) const;
  /// Maps every coefficient through the canonical embedding into `target`.
  Poly embedded(FieldId target) const;
  /// f(x^k).
  Poly inflate(std::size_t k) const;

  /// Degree first, then coefficients compared from the constant term up.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  std::size_t hash() const noexcept;

 private:
  void normalize();
  FieldId field_;
  std::vector<FFElem> c_;
};

struct DivMod {
  Poly quot;
  Poly rem;
};

DivMod divmod(const Poly& f, const Poly& g);
/// f / g, throwing VerificationError if g does not divide f.
Poly exact_div(const Poly& f, const Poly& g);
bool divides(const Poly& g, const Poly& f);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct XGcd {
  Poly g;  // monic
  Poly s;
  Poly t;  // s*a + t*b = g
};
XGcd xgcd(const Poly& a, const Poly& b);

/// Inverse of a modulo m; throws DomainError if not invertible.
Poly inverse_mod(const Poly& a, const Poly& m);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& a, const BigInt& e, const Poly& m);

/// The unique residue mod prod(moduli) matching every residue. Moduli must be
/// pairwise coprime.
Poly crt(const std::vector<Poly>& residues, const std::vector<Poly>& moduli);

struct Factorization {
  FFElem unit;
  std::vector<std::pair<Poly, unsigned>> factors;  // monic irreducible, sorted
  Poly expand() const;
};

bool is_irreducible(const Poly& f);
bool is_squarefree(const Poly& f);
/// Monic f = prod g_i^{m_i}, each g_i squarefree, pairwise coprime.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f);
/// For monic squarefree f: pairs (d, product of the irreducible factors of degree d).
std::vector<std::pair<unsigned, Poly>> distinct_degree_factorization(const Poly& f);
/// Splits monic squarefree f whose irreducible factors all have degree d.
std::vector<Poly> equal_degree_factorization(const Poly& f, unsigned d);
Factorization factorize(const Poly& f);
/// Distinct roots of f in its coefficient field, sorted.
std::vector<FFElem> roots(const Poly& f);
/// Some root of f, which must split into distinct linear factors.
FFElem any_root(const Poly& f);

struct SquarefreeSplit {
  FFElem unit;
  Poly conductor;   // c, monic
  Poly squarefree;  // delta_0, monic squarefree
};
/// f = unit * conductor^2 * squarefree with the conductor maximal.
SquarefreeSplit squarefree_split(const Poly& f);

int mobius(const Poly& m);

/// Calls `fn` on every monic polynomial of exactly degree d in lexicographic
/// order. Stops early if fn returns false.
void for_each_monic(FieldId f, unsigned d, const std::function<bool(const Poly&)>& fn);
std::vector<Poly> enumerate_monic_irreducibles(FieldId f, unsigned d);
/// Number of monic irreducibles of degree d over F_q.
BigInt count_monic_irreducibles(const BigInt& q, unsigned d);

}  // namespace drinfeld

template <>
struct std::hash<drinfeld::Poly> {
  std::size_t operator()(const drinfeld::Poly& f) const noexcept { return f.hash(); }
};
