#include "drinfeld/text.hpp"

#include <cctype>
#include <map>

#include "drinfeld/errors.hpp"

namespace drinfeld {

std::string format_scalar(const FFElem& c) {
  if (c.field().degree() == 1) return std::to_string(c.coords()[0]);
  if (c.is_zero()) return "0";
  const auto j = FieldRegistry::instance().discrete_log(c);
  if (*j == 0) return "1";
  if (*j == 1) return "z";
  return "z^" + std::to_string(*j);
}

namespace {

// Sums of terms c * t^i with c in A; t is tau.
using TauValue = std::map<unsigned, Poly>;

class Parser {
 public:
  Parser(std::string_view s, FieldId fq, char var, bool allow_tau)
      : s_(s), fq_(fq), var_(var), allow_tau_(allow_tau) {}

  TauValue parse() {
    TauValue v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static bool has_tau(const TauValue& v) {
    for (const auto& [k, c] : v)
      if (k > 0 && !c.is_zero()) return true;
    return false;
  }

  static void add_into(TauValue& acc, const TauValue& v, bool negate) {
    for (const auto& [k, c] : v) {
      auto& slot = acc[k];
      slot = negate ? slot - c : slot + c;
    }
  }

  TauValue scalar_value(const Poly& c) const { return TauValue{{0u, c}}; }

  Poly as_poly(const TauValue& v) const {
    if (has_tau(v)) fail("tau is not allowed here");
    auto it = v.find(0);
    return it == v.end() ? Poly(fq_) : it->second;
  }

  TauValue expr() {
    TauValue acc;
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    add_into(acc, term(), negate);
    for (;;) {
      if (accept('+'))
        add_into(acc, term(), false);
      else if (accept('-'))
        add_into(acc, term(), true);
      else
        return acc;
    }
  }

  TauValue term() {
    TauValue left = factor();
    while (accept('*')) {
      TauValue right = factor();
      if (has_tau(left)) fail("the tau factor must come last in a product");
      const Poly c = as_poly(left);
      TauValue prod;
      for (const auto& [k, r] : right) prod[k] = c * r;
      left = std::move(prod);
    }
    return left;
  }

  unsigned exponent() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    const auto e = std::stoull(std::string(s_.substr(start, pos_ - start)));
    if (e > 1u << 20) fail("exponent too large");
    return static_cast<unsigned>(e);
  }

  TauValue factor() {
    TauValue base = primary();
    if (!accept('^')) return base;
    const unsigned e = exponent();
    if (!has_tau(base)) return scalar_value(as_poly(base).pow(e));
    // only a bare t^k may be raised to a power
    if (base.size() != 1 || !base.begin()->second.is_one()) fail("only t itself may be raised to a power");
    return TauValue{{base.begin()->first * e, base.begin()->second}};
  }

  TauValue primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      TauValue v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string digits(s_.substr(start, pos_ - start));
      // reduce digit by digit so arbitrarily long literals are fine
      const PrimeField& fp = fq_.prime_field();
      std::uint32_t v = 0;
      for (char d : digits) v = fp.add(fp.mul(v, 10 % fp.modulus()), static_cast<std::uint32_t>(d - '0') % fp.modulus());
      return scalar_value(Poly::constant(FFElem::from_int(fq_, v)));
    }
    if (c == 'z') {
      ++pos_;
      if (fq_.degree() == 1) fail("z is only defined when q is not prime");
      return scalar_value(Poly::constant(FieldRegistry::instance().primitive_element(fq_)));
    }
    if (c == var_) {
      ++pos_;
      return scalar_value(Poly::x(fq_));
    }
    if (c == 't' && allow_tau_) {
      ++pos_;
      return TauValue{{1u, Poly::constant(FFElem::one(fq_))}};
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  FieldId fq_;
  char var_;
  bool allow_tau_;
};

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

FFElem parse_scalar(std::string_view s, FieldId fq) {
  const Poly p = parse_poly(s, fq, '\0');
  return p.is_zero() ? FFElem::zero(fq) : p.coeffs()[0];
}

std::string format_poly(const Poly& f, std::string_view var) {
  if (f.is_zero()) return "0";
  std::vector<std::string> terms;
  for (std::size_t k = f.size(); k-- > 0;) {
    const FFElem& c = f.coeffs()[k];
    if (c.is_zero()) continue;
    if (k == 0) {
      terms.push_back(format_scalar(c));
      continue;
    }
    std::string t = c.is_one() ? "" : format_scalar(c) + "*";
    t += var;
    if (k > 1) t += "^" + std::to_string(k);
    terms.push_back(std::move(t));
  }
  return join(terms, "+");
}

Poly parse_poly(std::string_view s, FieldId fq, char var) {
  Parser parser(s, fq, var, false);
  TauValue v = parser.parse();
  auto it = v.find(0);
  Poly out = it == v.end() ? Poly(fq) : it->second;
  return out.field().valid() ? out : Poly(fq);
}

std::vector<Poly> parse_tau_expression(std::string_view s, FieldId fq) {
  Parser parser(s, fq, 'T', true);
  TauValue v = parser.parse();
  std::vector<Poly> out;
  for (const auto& [k, c] : v) {
    if (out.size() <= k) out.resize(k + 1, Poly(fq));
    out[k] = c.field().valid() ? c : Poly(fq);
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

std::string format_factor(const Poly& c, std::string_view var) {
  if (c.is_one()) return "";
  std::size_t nonzero = 0;
  for (const auto& x : c.coeffs()) nonzero += x.is_zero() ? 0 : 1;
  const std::string body = format_poly(c, var);
  return nonzero <= 1 ? body : "(" + body + ")";
}

std::string format_weil(const std::vector<Poly>& low_coeffs) {
  const std::size_t r = low_coeffs.size();
  std::vector<std::string> terms;
  terms.push_back(r == 1 ? "x" : "x^" + std::to_string(r));
  for (std::size_t i = r; i-- > 0;) {
    const Poly& c = low_coeffs[i];
    if (c.is_zero()) continue;
    if (i == 0) {
      terms.push_back(format_poly(c));
      continue;
    }
    const std::string f = format_factor(c);
    std::string t = f.empty() ? "" : f + "*";
    t += i == 1 ? "x" : "x^" + std::to_string(i);
    terms.push_back(std::move(t));
  }
  return join(terms, " + ");
}

std::string format_matrix(const std::vector<std::vector<Poly>>& m) {
  std::vector<std::string> rows;
  for (const auto& row : m) {
    std::vector<std::string> cells;
    for (const auto& c : row) cells.push_back(format_poly(c));
    rows.push_back("[" + join(cells, ",") + "]");
  }
  return "[" + join(rows, ",") + "]";
}

}  // namespace drinfeld
