#pragma once

#include <string>

#include "kz/graph.hpp"
#include "kz/koszul_element.hpp"
#include "kz/monomial_ideal.hpp"

namespace kz {

/// Monomial token: factors `name^exp` joined by `*`, the exponent omitted
/// when 1; the unit monomial is the token `1`.
std::string format_monomial(const Monomial& m, const VariableSpace& space);
Monomial parse_monomial(const std::string& token, const VariableSpace& space);

/// Ideal text: a header line `vars: x1 x2 ...`, then one monomial per line.
/// Blank lines and `#` comments are ignored. The zero ideal is a header with
/// no monomial lines.
std::string format_ideal(const MonomialIdeal& ideal);
MonomialIdeal parse_ideal(const std::string& text);

/// Graph text: first line is the vertex count, then one `i j` pair per line,
/// 1-based. `#` comments are ignored.
std::string format_graph(const SimpleGraph& g);
SimpleGraph parse_graph(const std::string& text);

/// Koszul element text: one term per line, `coeff * monomial * e[J]` with J a
/// comma-separated 1-based index list (`e[]` for the empty set). The zero
/// element prints as an empty string.
std::string format_koszul_element(const KoszulElement& z);
KoszulElement parse_koszul_element(const std::string& text, const CoefficientModule& module);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace kz
