#include "drinfeld/poly_matrix.hpp"

#include <optional>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

FieldId field_of(const PolyMatrix& m) {
  for (const auto& row : m)
    for (const auto& c : row)
      if (c.field().valid()) return c.field();
  throw DomainError("matrix has no entries with a known field");
}

// Berkowitz: coefficients of det(xI - M), highest degree first, using only
// ring operations supplied by the caller.
template <class T, class Mul, class Sub, class Reduce>
std::vector<T> berkowitz(const std::vector<std::vector<T>>& M, const T& zero, const T& one, Mul mul, Sub sub,
                         Reduce reduce) {
  const std::size_t n = M.size();
  std::vector<T> C{one, sub(zero, M[0][0])};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<T> tvec{one, sub(zero, M[r][r])};
    std::vector<T> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = M[i][r];
    for (std::size_t k = 0; k < r; ++k) {
      T dot = zero;
      for (std::size_t j = 0; j < r; ++j) dot = reduce(dot + mul(M[r][j], v[j]));
      tvec.push_back(sub(zero, dot));
      std::vector<T> w(r, zero);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) w[i] = reduce(w[i] + mul(M[i][j], v[j]));
      v = std::move(w);
    }
    std::vector<T> next(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= i && j < C.size(); ++j) next[i] = reduce(next[i] + mul(tvec[i - j], C[j]));
    C = std::move(next);
  }
  return C;
}

FieldMatrix companion_block(const Poly& f) {
  const std::size_t k = static_cast<std::size_t>(f.deg());
  const FieldId L = f.field();
  FieldMatrix b(k, std::vector<FFElem>(k, FFElem::zero(L)));
  for (std::size_t i = 1; i < k; ++i) b[i][i - 1] = FFElem::one(L);
  for (std::size_t i = 0; i < k; ++i) b[i][k - 1] = -f.coeff(i);
  return b;
}

}  // namespace

PolyMatrix identity_matrix(FieldId f, std::size_t n) {
  PolyMatrix m(n, std::vector<Poly>(n, Poly(f)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Poly::constant(FFElem::one(f));
  return m;
}

PolyMatrix matrix_mul(const PolyMatrix& a, const PolyMatrix& b) {
  const FieldId f = field_of(a);
  PolyMatrix out(a.size(), std::vector<Poly>(b.empty() ? 0 : b[0].size(), Poly(f)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

PolyMatrix matrix_mod(const PolyMatrix& a, const Poly& m) {
  PolyMatrix out = a;
  for (auto& row : out)
    for (auto& c : row) c = c.field().valid() ? c % m : Poly(m.field());
  return out;
}

Poly determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  const FieldId f = field_of(m);
  PolyMatrix a = m;
  for (auto& row : a)
    for (auto& c : row)
      if (!c.field().valid()) c = Poly(f);
  Poly prev = Poly::constant(FFElem::one(f));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return Poly(f);
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = Poly(f);
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

std::vector<Poly> smith_normal_form(PolyMatrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw DomainError("smith_normal_form: matrix must be square");
  if (n == 0) return {};
  const FieldId f = field_of(a);
  for (auto& row : a)
    for (auto& c : row)
      if (!c.field().valid()) c = Poly(f);

  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // minimal-degree pivot, first in row-major order
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j) {
          if (a[i][j].is_zero()) continue;
          if (!piv || a[i][j].deg() < a[piv->first][piv->second].deg()) piv = {i, j};
        }
      if (!piv) throw DomainError("smith_normal_form: matrix is singular");
      std::swap(a[k], a[piv->first]);
      for (auto& row : a) std::swap(row[k], row[piv->second]);

      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a[i][k].is_zero()) continue;
        const Poly q = a[i][k] / a[k][k];
        for (std::size_t j = k; j < n; ++j) a[i][j] -= q * a[k][j];
        if (!a[i][k].is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a[k][j].is_zero()) continue;
        const Poly q = a[k][j] / a[k][k];
        for (std::size_t i = k; i < n; ++i) a[i][j] -= q * a[i][k];
        if (!a[k][j].is_zero()) clean = false;
      }
      if (!clean) continue;

      // the pivot must divide the remaining block; otherwise fold a row in
      bool divides_all = true;
      for (std::size_t i = k + 1; i < n && divides_all; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!divides(a[k][k], a[i][j])) {
            for (std::size_t c = k; c < n; ++c) a[k][c] += a[i][c];
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
  }
  std::vector<Poly> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(a[k][k].monic());
  return out;
}

std::vector<Poly> charpoly_mod(const PolyMatrix& m, const Poly& mod) {
  if (m.empty()) throw DomainError("charpoly_mod: empty matrix");
  const FieldId f = mod.field();
  PolyMatrix a = matrix_mod(m, mod);
  auto C = berkowitz<Poly>(
      a, Poly(f), Poly::constant(FFElem::one(f)), [&](const Poly& x, const Poly& y) { return (x * y) % mod; },
      [&](const Poly& x, const Poly& y) { return (x - y) % mod; }, [&](const Poly& x) { return x % mod; });
  return std::vector<Poly>(C.rbegin(), C.rend());
}

std::vector<FFElem> charpoly(const FieldMatrix& m) {
  if (m.empty()) throw DomainError("charpoly: empty matrix");
  const FieldId L = m[0][0].field();
  auto C = berkowitz<FFElem>(
      m, FFElem::zero(L), FFElem::one(L), [](const FFElem& x, const FFElem& y) { return x * y; },
      [](const FFElem& x, const FFElem& y) { return x - y; }, [](const FFElem& x) { return x; });
  return std::vector<FFElem>(C.rbegin(), C.rend());
}

RationalCanonicalForm rational_canonical_form(const FieldMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("rational_canonical_form: empty matrix");
  const FieldId L = m[0][0].field();
  PolyMatrix xm(n, std::vector<Poly>(n, Poly(L)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      xm[i][j] = Poly::constant(-m[i][j]);
      if (i == j) xm[i][j] += Poly::x(L);
    }
  RationalCanonicalForm out;
  for (auto& d : smith_normal_form(std::move(xm)))
    if (d.deg() > 0) out.invariant_factors.push_back(std::move(d));
  out.form.assign(n, std::vector<FFElem>(n, FFElem::zero(L)));
  std::size_t off = 0;
  for (const auto& d : out.invariant_factors) {
    const auto b = companion_block(d);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out.form[off + i][off + j] = b[i][j];
    off += b.size();
  }
  return out;
}

ResidueRationalCanonicalForm rational_canonical_form(const PolyMatrix& m, const ResidueField& k) {
  FieldMatrix fm;
  for (const auto& row : m) {
    std::vector<FFElem> r;
    for (const auto& c : row) r.push_back(k.reduce(c.field().valid() ? c : Poly(k.base())));
    fm.push_back(std::move(r));
  }
  RationalCanonicalForm rcf = rational_canonical_form(fm);
  ResidueRationalCanonicalForm out;
  out.invariant_factors = std::move(rcf.invariant_factors);
  for (const auto& row : rcf.form) {
    std::vector<Poly> r;
    for (const auto& c : row) r.push_back(k.lift(c));
    out.form.push_back(std::move(r));
  }
  return out;
}

}  // namespace drinfeld
