#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "bergcomm/psets.hpp"
#include "bergcomm/symbols.hpp"
#include "bergcomm/toeplitz.hpp"

namespace bergcomm {

using Json = nlohmann::ordered_json;

/// Either kind of symbol the command line accepts.
using SymbolSpec = std::variant<MonomialCombo, SeparatelyRadialSymbol>;

/// Symbol grammar:
///   {"type":"monomial_combo","n":N,"terms":[{"a":[..],"b":[..],"re":x,"im":y}, ...]}
///   {"type":"separately_radial","n":N,"s":[..],"h":H}
/// with H one of
///   {"kind":"constant","value":x,"im":y}
///   {"kind":"power","t":t,"scale":x,"scale_im":y}
///   {"kind":"even_poly","coeffs":[..],"coeffs_im":[..]}
///   {"kind":"table","r":[..],"values":[..],"values_im":[..]}
/// Imaginary parts and "scale" are optional. Malformed JSON raises
/// ParseError with a byte offset; structural problems carry a JSON pointer.
SymbolSpec parse_symbol(std::string_view text);
SymbolSpec parse_symbol(const Json& j);

Json symbol_to_json(const MonomialCombo& f);
Json symbol_to_json(const SeparatelyRadialSymbol& g);

/// SetExpr grammar (tag plus children):
///   {"tag":"finite","n":N,"points":[[..], ...]}   {"tag":"full","n":N}
///   {"tag":"union","children":[A,B]}               {"tag":"complement","children":[A]}
///   {"tag":"translate","l":[..],"children":[A]}    {"tag":"product_with_full","axis":j,"children":[A]}
SetPtr parse_set_expr(std::string_view text);
SetPtr parse_set_expr(const Json& j);
Json set_expr_to_json(const SetPtr& e);

Json index_to_json(std::span<const int> v);
Json complex_to_json(complex z);

/// Dense row-major export: basis list, valid columns, "re" and "im" arrays
/// of size N*N.
Json matrix_to_json(const PrefixOperator& A);
PrefixOperator matrix_from_json(const Json& j);

/// "row,col,re,im" with basis positions, zero entries omitted.
std::string matrix_to_csv(const Matrix& M);
Matrix matrix_from_csv(std::string_view text, std::size_t size);

/// Every float printed with 17 significant digits, so output round-trips.
std::string dump_json(const Json& j, int indent = 2);
std::string format_double(double x);

/// Reads a symbol/set flag: inline JSON when it starts with '{', else a path.
std::string read_text_argument(const std::string& arg);

/// Writes via a temporary file in the same directory and renames it.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace bergcomm
