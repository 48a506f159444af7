#ifndef NILCERT_IO_EXPRESSION_HPP
#define NILCERT_IO_EXPRESSION_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arith/tower.hpp"

namespace nilcert {

/// Coefficients of a vector in the basis e_1..e_n.
using LinearCombination = std::vector<TowerElement>;

/// Parses a linear combination of e_1..e_dim with coefficients built from
/// integers, t, i, sqrt(...), + - * / ^ and parentheses. Juxtaposition
/// multiplies ("2t e_3"). A bare scalar 0 is accepted as the zero vector.
/// Throws SyntaxError (with a 0-based column) or MultipleRadicals.
LinearCombination parse_linear_combination(std::string_view text, std::size_t dim);

/// Parses a scalar expression (no e_k allowed).
TowerElement parse_scalar(std::string_view text);

/// Canonical text with explicit '*'; parse_linear_combination inverts it.
std::string print_linear_combination(const LinearCombination& v);

std::optional<GaussianRational> as_constant(const TowerElement& x);

}  // namespace nilcert

#endif
