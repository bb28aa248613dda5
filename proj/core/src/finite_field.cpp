#include "drinfeld/finite_field.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "drinfeld/errors.hpp"
#include "field_data.hpp"
#include "fp_poly.hpp"

namespace drinfeld {

namespace detail {

FieldData::FieldData(std::uint32_t p_, unsigned n, std::vector<std::uint32_t> mod)
    : p(p_), degree(n), fp(p_), modulus(std::move(mod)), frobenius(p_, n, n), order(1) {
  for (unsigned k = 0; k < degree; ++k)
    if (modulus[k] != 0) tail.emplace_back(k, fp.neg(modulus[k]));
  for (unsigned i = 0; i < degree; ++i) order *= p;

  const RawPoly m(modulus.begin(), modulus.end());
  const RawPoly xp = raw_powmod(RawPoly{0, 1}, p, m, p);
  RawPoly col{1};
  for (unsigned j = 0; j < degree; ++j) {
    RawPoly padded = col;
    padded.resize(degree, 0);
    frobenius.set_column(j, padded);
    col = raw_mulmod(col, xp, m, p);
  }
}

std::uint64_t coord_code(const FieldData& f, std::span<const std::uint32_t> c) {
  std::uint64_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * f.p + c[i];
  return code;
}

}  // namespace detail

namespace {

using detail::FieldData;
using detail::RawPoly;

bool has_root(const RawPoly& f, std::uint32_t p) {
  const PrimeField fp(p);
  for (std::uint32_t a = 0; a < p; ++a) {
    std::uint32_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = fp.add(fp.mul(v, a), f[i]);
    if (v == 0) return true;
  }
  return false;
}

// Ben-Or: f of degree n is irreducible iff gcd(f, x^{p^i} - x) = 1 for i <= n/2.
bool raw_irreducible(const RawPoly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  if (n <= 1) return n == 1;
  if (p <= 64 && has_root(f, p)) return false;
  RawPoly h{0, 1};
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = detail::raw_powmod(h, p, f, p);
    RawPoly d = detail::raw_sub(h, RawPoly{0, 1}, p);
    if (detail::raw_gcd(f, d, p).size() != 1) return false;
  }
  return true;
}

// Smallest monic irreducible of degree n, comparing (c_0, ..., c_{n-1})
// lexicographically with c_0 most significant.
std::vector<std::uint32_t> lex_modulus(std::uint32_t p, unsigned n) {
  if (n == 1) return {0, 1};
  std::vector<std::uint32_t> f(n + 1, 0);
  f[n] = 1;
  f[0] = 1;
  for (;;) {
    if (raw_irreducible(f, p)) return f;
    // advance: c_{n-1} is the least significant digit
    unsigned i = n - 1;
    for (;;) {
      if (++f[i] < p) break;
      f[i] = 0;
      if (i == 0) throw VerificationError("lex_modulus: search space exhausted");
      --i;
    }
  }
}

unsigned default_max_degree() {
  if (const char* env = std::getenv("DF_MAX_EXT_DEGREE")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return 256;
}

const FieldData& data_of(FieldId f) {
  if (!f.valid()) throw DomainError("use of an uninitialized field handle");
  return *f.data();
}

void check_same(const FFElem& a, const FFElem& b) {
  if (!(a.field() == b.field()))
    throw DomainError("field mismatch: " + a.field().name() + " vs " + b.field().name());
}

void mul_coords(const FieldData& F, const std::uint32_t* a, const std::uint32_t* b, Coords& out) {
  const unsigned n = F.degree;
  const std::uint32_t p = F.p;
  if (n == 1) {
    out[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[0]) * b[0] % p);
    return;
  }
  boost::container::small_vector<std::uint64_t, 32> t(2 * n - 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    const std::uint64_t ai = a[i];
    for (unsigned j = 0; j < n; ++j) t[i + j] += ai * b[j];
  }
  for (unsigned i = 2 * n - 2; i >= n; --i) {
    const std::uint64_t c = t[i] % p;
    if (c == 0) continue;
    for (const auto& [k, m] : F.tail) t[i - n + k] += c * m;
  }
  for (unsigned j = 0; j < n; ++j) out[j] = static_cast<std::uint32_t>(t[j] % p);
}

}  // namespace

// FieldId

std::uint32_t FieldId::characteristic() const { return data_of(*this).p; }
unsigned FieldId::degree() const { return data_of(*this).degree; }
BigInt FieldId::order() const { return data_of(*this).order; }
std::span<const std::uint32_t> FieldId::modulus() const { return data_of(*this).modulus; }
const PrimeField& FieldId::prime_field() const { return data_of(*this).fp; }

std::string FieldId::name() const {
  if (!valid()) return "F_?";
  std::string s = "F_" + std::to_string(data_->p);
  if (data_->degree > 1) s += "^" + std::to_string(data_->degree);
  return s;
}

// FFElem

FFElem::FFElem(FieldId f, Coords c) : field_(f), c_(std::move(c)) {
  const FieldData& F = data_of(f);
  if (c_.size() != F.degree) throw DomainError("FFElem: coordinate length mismatch for " + f.name());
  for (auto& v : c_) v %= F.p;
}

FFElem FFElem::zero(FieldId f) { return FFElem(f, Coords(data_of(f).degree, 0)); }

FFElem FFElem::one(FieldId f) {
  Coords c(data_of(f).degree, 0);
  c[0] = 1;
  return FFElem(f, std::move(c));
}

FFElem FFElem::from_int(FieldId f, std::int64_t v) {
  const FieldData& F = data_of(f);
  Coords c(F.degree, 0);
  c[0] = F.fp.reduce(v);
  return FFElem(f, std::move(c));
}

FFElem FFElem::gen(FieldId f) {
  const FieldData& F = data_of(f);
  if (F.degree == 1) return from_int(f, 0);  // modulus x
  Coords c(F.degree, 0);
  c[1] = 1;
  return FFElem(f, std::move(c));
}

bool FFElem::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FFElem::is_one() const noexcept {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FFElem::is_prime_constant() const noexcept {
  return c_.empty() || std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

FFElem FFElem::operator+(const FFElem& o) const {
  FFElem r = *this;
  r += o;
  return r;
}

FFElem FFElem::operator-(const FFElem& o) const {
  FFElem r = *this;
  r -= o;
  return r;
}

FFElem FFElem::operator-() const {
  const PrimeField& fp = data_of(field_).fp;
  FFElem r = *this;
  for (auto& v : r.c_) v = fp.neg(v);
  return r;
}

FFElem& FFElem::operator+=(const FFElem& o) {
  check_same(*this, o);
  const PrimeField& fp = data_of(field_).fp;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = fp.add(c_[i], o.c_[i]);
  return *this;
}

FFElem& FFElem::operator-=(const FFElem& o) {
  check_same(*this, o);
  const PrimeField& fp = data_of(field_).fp;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = fp.sub(c_[i], o.c_[i]);
  return *this;
}

FFElem FFElem::operator*(const FFElem& o) const {
  check_same(*this, o);
  FFElem r;
  r.field_ = field_;
  r.c_.resize(c_.size());
  mul_coords(data_of(field_), c_.data(), o.c_.data(), r.c_);
  return r;
}

FFElem& FFElem::operator*=(const FFElem& o) {
  *this = *this * o;
  return *this;
}

FFElem FFElem::operator/(const FFElem& o) const { return *this * o.inverse(); }

FFElem FFElem::scaled(std::uint32_t s) const {
  const PrimeField& fp = data_of(field_).fp;
  FFElem r = *this;
  s %= fp.modulus();
  for (auto& v : r.c_) v = fp.mul(v, s);
  return r;
}

FFElem FFElem::inverse() const {
  const FieldData& F = data_of(field_);
  if (is_zero()) throw DomainError("inverse of zero in " + field_.name());
  if (F.degree == 1) return from_int(field_, F.fp.inv(c_[0]));
  RawPoly a(c_.begin(), c_.end());
  detail::trim(a);
  RawPoly inv = detail::raw_inverse_mod(a, RawPoly(F.modulus.begin(), F.modulus.end()), F.p);
  if (inv.empty()) throw VerificationError("FFElem::inverse: modulus not irreducible");
  inv.resize(F.degree, 0);
  return FFElem(field_, Coords(inv.begin(), inv.end()));
}

FFElem FFElem::pow(std::uint64_t e) const {
  FFElem r = one(field_), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

FFElem FFElem::pow(const BigInt& e) const {
  if (e < 0) return inverse().pow(BigInt(-e));
  FFElem r = one(field_), b = *this;
  const std::size_t bits = e == 0 ? 0 : msb(e) + 1;
  for (std::size_t i = 0; i < bits; ++i) {
    if (bit_test(e, static_cast<unsigned>(i))) r *= b;
    if (i + 1 < bits) b *= b;
  }
  return r;
}

FFElem FFElem::frobenius(long k) const {
  const FieldData& F = data_of(field_);
  const long n = F.degree;
  long steps = ((k % n) + n) % n;
  if (n == 1 || steps == 0) return *this;
  std::vector<std::uint32_t> v(c_.begin(), c_.end());
  while (steps-- > 0) v = F.frobenius.apply(v);
  return FFElem(field_, Coords(v.begin(), v.end()));
}

std::strong_ordering operator<=>(const FFElem& a, const FFElem& b) {
  return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

bool operator==(const FFElem& a, const FFElem& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

std::size_t FFElem::hash() const noexcept {
  std::size_t h = std::hash<const void*>{}(field_.data());
  for (auto v : c_) h = h * 1000003u ^ v;
  return h;
}

std::string FFElem::debug_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << "]@" << field_.name();
  return os.str();
}

// Embedding

Embedding::Embedding(FieldId sub, FieldId super, MatrixFp images)
    : sub_(sub), super_(super), images_(std::move(images)), solver_(images_) {}

FFElem Embedding::apply(const FFElem& x) const {
  if (!(x.field() == sub_)) throw DomainError("Embedding::apply: element not in " + sub_.name());
  const auto v = images_.apply(x.coords());
  return FFElem(super_, Coords(v.begin(), v.end()));
}

std::optional<FFElem> Embedding::preimage(const FFElem& y) const {
  if (!(y.field() == super_)) throw DomainError("Embedding::preimage: element not in " + super_.name());
  auto v = solver_.solve(y.coords());
  if (!v) return std::nullopt;
  return FFElem(sub_, Coords(v->begin(), v->end()));
}

// FieldRegistry

struct FieldRegistry::Impl : detail::RegistryState {};

FieldRegistry::FieldRegistry() : impl_(new Impl), max_degree_(default_max_degree()) {}

FieldRegistry& FieldRegistry::instance() {
  static FieldRegistry reg;
  return reg;
}

FieldId FieldRegistry::prime_field(std::uint32_t p) { return field(p, 1); }

FieldId FieldRegistry::field(std::uint32_t p, unsigned degree) {
  if (degree == 0) throw DomainError("field degree must be positive");
  if (degree > max_degree_)
    throw ResourceError("extension degree " + std::to_string(degree) + " over F_" + std::to_string(p) +
                        " exceeds the cap " + std::to_string(max_degree_) +
                        " (set DF_MAX_EXT_DEGREE to raise it)");
  if (p < 2 || p > kMaxCharacteristic || !is_prime(p))
    throw DomainError("characteristic must be a prime <= " + std::to_string(kMaxCharacteristic));
  const auto key = std::make_pair(p, degree);
  {
    std::shared_lock lock(impl_->mu);
    auto it = impl_->fields.find(key);
    if (it != impl_->fields.end()) return FieldId(it->second.get());
  }
  auto data = std::make_unique<FieldData>(p, degree, lex_modulus(p, degree));
  std::unique_lock lock(impl_->mu);
  auto [it, inserted] = impl_->fields.emplace(key, std::move(data));
  return FieldId(it->second.get());
}

const Embedding& FieldRegistry::embedding(FieldId sub, FieldId super) {
  const FieldData& S = data_of(sub);
  const FieldData& L = data_of(super);
  if (S.p != L.p || L.degree % S.degree != 0)
    throw DomainError("no embedding " + sub.name() + " -> " + super.name());
  const auto key = std::make_pair(sub.data(), super.data());
  {
    std::shared_lock lock(impl_->mu);
    auto it = impl_->embeddings.find(key);
    if (it != impl_->embeddings.end()) return *it->second;
  }
  auto emb = detail::compute_embedding(sub, super);
  std::unique_lock lock(impl_->mu);
  auto [it, inserted] = impl_->embeddings.emplace(key, std::move(emb));
  return *it->second;
}

namespace {

constexpr std::uint64_t kSmallFieldLimit = 1u << 20;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

static void build_tables(FieldId f) {
  const FieldData& F = *f.data();
  if (F.order > kSmallFieldLimit)
    throw ResourceError("element tables requested for large field " + f.name());
  const auto order = static_cast<std::uint64_t>(F.order);
  F.elements.reserve(order);
  // lexicographic: c_0 is the most significant digit
  for (std::uint64_t k = 0; k < order; ++k) {
    Coords c(F.degree, 0);
    std::uint64_t t = k;
    for (unsigned i = F.degree; i-- > 0;) {
      c[i] = static_cast<std::uint32_t>(t % F.p);
      t /= F.p;
    }
    F.elements.emplace_back(f, std::move(c));
  }
  const std::uint64_t group = order - 1;
  const auto primes = prime_factors(group);
  for (const auto& x : F.elements) {
    if (x.is_zero()) continue;
    bool ok = true;
    for (auto l : primes)
      if (x.pow(group / l).is_one()) {
        ok = false;
        break;
      }
    if (ok) {
      F.primitive = x;
      break;
    }
  }
  F.log.assign(order, 0);
  FFElem y = FFElem::one(f);
  for (std::uint64_t k = 0; k < group; ++k) {
    F.log[detail::coord_code(F, y.coords())] = static_cast<std::uint32_t>(k);
    y *= F.primitive;
  }
}

const std::vector<FFElem>& FieldRegistry::elements(FieldId f) {
  const FieldData& F = data_of(f);
  std::call_once(F.tables_once, [&] { build_tables(f); });
  return F.elements;
}

FFElem FieldRegistry::primitive_element(FieldId f) {
  elements(f);
  return f.data()->primitive;
}

std::optional<std::uint32_t> FieldRegistry::discrete_log(const FFElem& x) {
  if (x.is_zero()) return std::nullopt;
  elements(x.field());
  const FieldData& F = *x.field().data();
  return F.log[detail::coord_code(F, x.coords())];
}

FFElem embed(const FFElem& x, FieldId target) {
  if (x.field() == target) return x;
  return FieldRegistry::instance().embedding(x.field(), target).apply(x);
}

std::optional<FFElem> restrict_to(const FFElem& x, FieldId sub) {
  if (x.field() == sub) return x;
  return FieldRegistry::instance().embedding(sub, x.field()).preimage(x);
}

// FieldTower

FieldTower::FieldTower(FieldId base) : base_(base) { data_of(base); }

FieldId FieldTower::make_extension(FieldId over, unsigned n) const {
  if (n == 0) throw DomainError("make_extension: degree must be positive");
  auto& reg = FieldRegistry::instance();
  FieldId f = reg.field(over.characteristic(), over.degree() * n);
  reg.embedding(over, f);
  return f;
}

unsigned FieldTower::relative_degree(FieldId f) const {
  if (f.characteristic() != base_.characteristic() || f.degree() % base_.degree() != 0)
    throw DomainError(base_.name() + " is not a subfield of " + f.name());
  return f.degree() / base_.degree();
}

FFElem FieldTower::frobenius_power(const FFElem& x, long k) const {
  return x.frobenius(k * static_cast<long>(base_.degree()));
}

FFElem FieldTower::norm_to_base(const FFElem& x) const {
  const unsigned n = relative_degree(x.field());
  FFElem acc = x, y = x;
  for (unsigned i = 1; i < n; ++i) {
    y = frobenius_power(y, 1);
    acc *= y;
  }
  return to_base(acc);
}

FFElem FieldTower::trace_to_base(const FFElem& x) const {
  const unsigned n = relative_degree(x.field());
  FFElem acc = x, y = x;
  for (unsigned i = 1; i < n; ++i) {
    y = frobenius_power(y, 1);
    acc += y;
  }
  return to_base(acc);
}

FFElem FieldTower::to_base(const FFElem& x) const {
  auto r = restrict_to(x, base_);
  if (!r) throw DomainError("element " + x.debug_string() + " does not lie in " + base_.name());
  return *r;
}

FieldId field_of_order(std::uint64_t q) {
  if (q < 2) throw DomainError("q must be a prime power");
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  unsigned e = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw DomainError(std::to_string(q) + " is not a prime power");
  if (p > kMaxCharacteristic) throw DomainError("characteristic " + std::to_string(p) + " is too large");
  return FieldRegistry::instance().field(static_cast<std::uint32_t>(p), e);
}

}  // namespace drinfeld
