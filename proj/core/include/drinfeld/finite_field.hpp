#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "drinfeld/prime_field.hpp"

namespace drinfeld {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {
struct FieldData;
}

/// Handle to a registered finite field F_{p^N}. Handles are cheap to copy and
/// compare; the underlying data lives in the process-wide registry and is
/// never destroyed.
class FieldId {
 public:
  FieldId() = default;

  bool valid() const noexcept { return data_ != nullptr; }
  std::uint32_t characteristic() const;
  /// Degree over the prime field.
  unsigned degree() const;
  BigInt order() const;
  /// Monic defining polynomial over F_p, low degree first, length degree()+1.
  std::span<const std::uint32_t> modulus() const;
  const PrimeField& prime_field() const;
  std::string name() const;

  friend bool operator==(FieldId a, FieldId b) noexcept { return a.data_ == b.data_; }

  const detail::FieldData* data() const noexcept { return data_; }

 private:
  friend class FieldRegistry;
  explicit FieldId(const detail::FieldData* d) : data_(d) {}
  const detail::FieldData* data_ = nullptr;
};

using Coords = boost::container::small_vector<std::uint32_t, 8>;

/// Element of a registered field, stored as coordinates on the power basis
/// 1, x, ..., x^{N-1} of F_p[x]/(modulus).
class FFElem {
 public:
  FFElem() = default;
  FFElem(FieldId f, Coords c);

  static FFElem zero(FieldId f);
  static FFElem one(FieldId f);
  static FFElem from_int(FieldId f, std::int64_t v);
  /// The class of x in F_p[x]/(modulus).
  static FFElem gen(FieldId f);

  FieldId field() const noexcept { return field_; }
  std::span<const std::uint32_t> coords() const noexcept { return {c_.data(), c_.size()}; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True if the element lies in the prime field.
  bool is_prime_constant() const noexcept;

  FFElem operator+(const FFElem& o) const;
  FFElem operator-(const FFElem& o) const;
  FFElem operator-() const;
  FFElem operator*(const FFElem& o) const;
  FFElem operator/(const FFElem& o) const;
  FFElem& operator+=(const FFElem& o);
  FFElem& operator-=(const FFElem& o);
  FFElem& operator*=(const FFElem& o);
  FFElem scaled(std::uint32_t s) const;

  /// Throws DomainError on zero.
  FFElem inverse() const;
  FFElem pow(std::uint64_t e) const;
  FFElem pow(const BigInt& e) const;
  /// x^{p^k} for the absolute Frobenius; k may be negative.
  FFElem frobenius(long k = 1) const;

  /// Lexicographic on coordinates, constant coordinate most significant.
  friend std::strong_ordering operator<=>(const FFElem& a, const FFElem& b);
  friend bool operator==(const FFElem& a, const FFElem& b);

  std::size_t hash() const noexcept;
  std::string debug_string() const;

 private:
  FieldId field_;
  Coords c_;
};

/// Embedding F_{p^m} -> F_{p^N}, m | N, stored by the images of the power
/// basis of the subfield.
class Embedding {
 public:
  Embedding(FieldId sub, FieldId super, MatrixFp images);

  FieldId sub() const noexcept { return sub_; }
  FieldId super() const noexcept { return super_; }
  const MatrixFp& images() const noexcept { return images_; }

  FFElem apply(const FFElem& x) const;
  /// Preimage of y if y lies in the image, otherwise nullopt.
  std::optional<FFElem> preimage(const FFElem& y) const;

 private:
  FieldId sub_;
  FieldId super_;
  MatrixFp images_;
  LinearSolver solver_;
};

/// Process-wide registry of fields and embeddings. Lookups take a shared lock;
/// new registrations are computed outside the lock and inserted under an
/// exclusive one, so concurrent callers always observe the same objects.
class FieldRegistry {
 public:
  static FieldRegistry& instance();

  FieldId prime_field(std::uint32_t p);
  /// The field of degree N over F_p with the lexicographically smallest monic
  /// irreducible modulus. Throws ResourceError above max_degree().
  FieldId field(std::uint32_t p, unsigned degree);
  /// The canonical embedding sub -> super. Embeddings are chosen so that for
  /// every chain F_a -> F_b -> F_c the composite equals the direct map.
  const Embedding& embedding(FieldId sub, FieldId super);

  /// Cap on degrees over the prime field. Defaults to 256; the environment
  /// variable DF_MAX_EXT_DEGREE overrides it at first use.
  unsigned max_degree() const noexcept { return max_degree_; }
  void set_max_degree(unsigned d) noexcept { max_degree_ = d; }

  /// Lexicographically smallest generator of the multiplicative group.
  /// Requires the field order to be below 2^32.
  FFElem primitive_element(FieldId f);
  /// Discrete log to the primitive element; fields of order <= 2^20 only.
  std::optional<std::uint32_t> discrete_log(const FFElem& x);
  /// All field elements in lexicographic order; fields of order <= 2^20 only.
  const std::vector<FFElem>& elements(FieldId f);

 private:
  FieldRegistry();
  struct Impl;
  Impl* impl_;
  unsigned max_degree_;
};

/// F_q for a prime power q. Throws DomainError otherwise.
FieldId field_of_order(std::uint64_t q);

/// Maps x into the field `target`, which must contain x.field().
FFElem embed(const FFElem& x, FieldId target);
/// Recovers x as an element of `sub` if it lies there.
std::optional<FFElem> restrict_to(const FFElem& x, FieldId sub);

/// View of the tower over a fixed base field F_q. All q-power notions
/// (Frobenius, norm, trace) are relative to this base.
class FieldTower {
 public:
  explicit FieldTower(FieldId base);

  FieldId base() const noexcept { return base_; }
  /// log_p q.
  unsigned base_degree() const noexcept { return base_.degree(); }
  BigInt q() const { return base_.order(); }

  /// The field of degree n over `over`; registers the embedding over -> result.
  FieldId make_extension(FieldId over, unsigned n) const;
  /// Degree of f over F_q. Throws DomainError if F_q is not a subfield.
  unsigned relative_degree(FieldId f) const;

  FFElem frobenius_power(const FFElem& x, long k) const;
  FFElem norm_to_base(const FFElem& x) const;
  FFElem trace_to_base(const FFElem& x) const;
  FFElem to_field(const FFElem& base_elem, FieldId target) const { return embed(base_elem, target); }
  /// Element of F_q equal to x, or throws if x is not in F_q.
  FFElem to_base(const FFElem& x) const;

 private:
  FieldId base_;
};

}  // namespace drinfeld

template <>
struct std::hash<drinfeld::FFElem> {
  std::size_t operator()(const drinfeld::FFElem& x) const noexcept { return x.hash(); }
};
