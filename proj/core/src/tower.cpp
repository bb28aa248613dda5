// Canonical embeddings between registered fields.
//
// The image of the generator x_m of F_{p^m} in F_{p^N} is the
// lexicographically smallest root y of the modulus of F_{p^m} such that, for
// every prime l | m, the composite F_{p^{m/l}} -> F_{p^m} -> F_{p^N} equals the
// registered direct embedding. This is the usual compatibility condition for
// Conway-style systems and makes composed embeddings agree along any chain.

#include <algorithm>

#include "drinfeld/errors.hpp"
#include "drinfeld/poly.hpp"
#include "field_data.hpp"

namespace drinfeld::detail {

namespace {

MatrixFp power_images(const FFElem& y, unsigned m) {
  const FieldId L = y.field();
  MatrixFp images(L.characteristic(), L.degree(), m);
  FFElem t = FFElem::one(L);
  for (unsigned j = 0; j < m; ++j) {
    images.set_column(j, t.coords());
    t *= y;
  }
  return images;
}

FFElem combine(std::span<const std::uint32_t> k, const std::vector<FFElem>& powers) {
  FFElem acc = FFElem::zero(powers.front().field());
  for (std::size_t j = 0; j < k.size(); ++j)
    if (k[j] != 0) acc += powers[j].scaled(k[j]);
  return acc;
}

std::vector<FFElem> powers_of(const FFElem& w, unsigned count) {
  std::vector<FFElem> out;
  out.reserve(count);
  FFElem t = FFElem::one(w.field());
  for (unsigned j = 0; j < count; ++j) {
    out.push_back(t);
    t *= w;
  }
  return out;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Some root of the modulus of `sub` inside `super`.
FFElem some_root(FieldId sub, FieldId super) {
  const unsigned m = sub.degree();
  const unsigned N = super.degree();
  const std::uint32_t p = sub.characteristic();

  // The copy of F_{p^m} inside F_{p^N} is the kernel of Fr^m - 1.
  MatrixFp fr = super.data()->frobenius;
  MatrixFp frm = MatrixFp::identity(p, N);
  for (unsigned i = 0; i < m; ++i) frm = fr * frm;
  for (unsigned i = 0; i < N; ++i) frm(i, i) = super.prime_field().sub(frm(i, i), 1);
  const auto basis = null_space(frm);
  if (basis.size() != m) throw VerificationError("subfield kernel has the wrong dimension");

  // Pick a primitive element w of that copy, giving F_p[X]/(h) with h = minpoly(w).
  std::vector<FFElem> kernel;
  for (const auto& v : basis) kernel.emplace_back(super, Coords(v.begin(), v.end()));
  std::vector<FFElem> candidates = kernel;
  for (std::size_t i = 1; i < kernel.size(); ++i) candidates.push_back(kernel[0] + kernel[i]);
  for (std::size_t i = 1; i < kernel.size(); ++i) candidates.push_back(kernel[i - 1] + kernel[i]);
  FFElem acc = FFElem::zero(super);
  for (const auto& k : kernel) {
    acc += k;
    candidates.push_back(acc);
  }
  for (const auto& w : candidates) {
    auto pw = powers_of(w, m + 1);
    const MatrixFp M = power_images(w, m);
    LinearSolver solver(M);
    if (solver.rank() != m) continue;
    auto h = solver.solve(pw[m].coords());
    // h(X) = X^m - sum h_j X^j
    std::vector<std::int64_t> hc(m + 1);
    for (unsigned j = 0; j < m; ++j) hc[j] = -static_cast<std::int64_t>((*h)[j]);
    hc[m] = 1;
    const Poly hpoly = Poly::from_ints(sub, hc);
    const FFElem rho = any_root(hpoly);
    // x_m = sum k_j rho^j transports to y = sum k_j w^j
    const MatrixFp R = power_images(rho, m);
    auto k = solve(R, FFElem::gen(sub).coords());
    if (!k) throw VerificationError("generator not in the span of rho powers");
    pw.pop_back();
    return combine(*k, pw);
  }
  throw VerificationError("no primitive element found in subfield copy");
}

}  // namespace

std::unique_ptr<Embedding> compute_embedding(FieldId sub, FieldId super) {
  const unsigned m = sub.degree();
  const unsigned N = super.degree();
  const std::uint32_t p = sub.characteristic();
  if (m == N) return std::make_unique<Embedding>(sub, super, MatrixFp::identity(p, N));
  if (m == 1) {
    MatrixFp images(p, N, 1);
    images(0, 0) = 1;
    return std::make_unique<Embedding>(sub, super, std::move(images));
  }

  const FFElem y0 = some_root(sub, super);
  std::vector<FFElem> conj{y0};
  for (unsigned i = 1; i < m; ++i) conj.push_back(conj.back().frobenius(1));
  std::sort(conj.begin(), conj.end());

  auto& reg = FieldRegistry::instance();
  struct Constraint {
    std::vector<std::uint32_t> inner;  // image of x_d in F_{p^m}
    FFElem target;                     // image of x_d in F_{p^N}
  };
  std::vector<Constraint> constraints;
  for (unsigned l : prime_divisors(m)) {
    const unsigned d = m / l;
    if (d == 1) continue;
    FieldId fd = reg.field(p, d);
    const auto inner = reg.embedding(fd, sub).images().column(1);
    const auto outer = reg.embedding(fd, super).images().column(1);
    constraints.push_back({inner, FFElem(super, Coords(outer.begin(), outer.end()))});
  }

  for (const auto& y : conj) {
    const auto pw = powers_of(y, m);
    const bool ok = std::all_of(constraints.begin(), constraints.end(),
                                [&](const Constraint& c) { return combine(c.inner, pw) == c.target; });
    if (ok) return std::make_unique<Embedding>(sub, super, power_images(y, m));
  }
  throw VerificationError("no compatible embedding " + sub.name() + " -> " + super.name());
}

}  // namespace drinfeld::detail
