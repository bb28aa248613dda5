#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "drinfeld/poly.hpp"

namespace drinfeld {

/// Text form of an element of F_q: an integer when q is prime, otherwise
/// 0, 1, z or z^j with z the lexicographically smallest primitive element.
std::string format_scalar(const FFElem& c);
FFElem parse_scalar(std::string_view s, FieldId fq);

/// Terms `c*T^k` in descending degree joined by `+`, e.g. `T^2+2*T+1`.
std::string format_poly(const Poly& f, std::string_view var = "T");
/// Whitespace-insensitive; accepts + - * ^ and parentheses. Coefficients are
/// integers (read in the prime field) or powers of z when q is not prime.
Poly parse_poly(std::string_view s, FieldId fq, char var = 'T');

/// Parses a twisted polynomial written with `t` for tau, such as
/// `T+1*t+(T+1)*t^2`. The tau factor must be the last factor of each term.
/// Returns coefficients low tau-degree first.
std::vector<Poly> parse_tau_expression(std::string_view s, FieldId fq);

/// Coefficient c written as a factor: bare for single terms, parenthesized
/// otherwise. Returns empty for c = 1.
std::string format_factor(const Poly& c, std::string_view var = "T");

/// x^r + c_{r-1} x^{r-1} + ... + c_0 written as `x^2 + x + 2*T`.
std::string format_weil(const std::vector<Poly>& low_coeffs);

/// A square matrix of residues as `[[a,b],[c,d]]`.
std::string format_matrix(const std::vector<std::vector<Poly>>& m);

}  // namespace drinfeld
