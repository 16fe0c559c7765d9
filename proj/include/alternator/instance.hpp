#ifndef ALTERNATOR_INSTANCE_HPP
#define ALTERNATOR_INSTANCE_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "alternator/algebra.hpp"

namespace alternator {

/// Builds the field described by {"kind":"ratfunc","vars":[...]} or
/// {"kind":"gf2k","k":...,"modulus":[c0,...,ck]} (modulus optional for
/// k <= 8).  Malformed descriptors raise ParseError.
FieldPtr build_field(const nlohmann::json& doc);

/// Quaternion element from a string over the basis tokens 1, i, j, ij:
/// top-level '+' separates terms, an optional coefficient is attached with
/// '*' (e.g. "j+ij", "(t+1)*j+ij").  A term without a basis token is a
/// scalar.
Vec parse_quaternion_element(const FieldPtr& F, std::string_view text);

/// Builds the algebra+involution described by an instance document:
/// {"field": ..., "algebra": {"kind":"matrix"|"quaternion"|"tensor", ...}}.
/// Construction failures (invalid involution, non-unit u, ...) propagate as
/// the usual invalg errors; structural problems raise ParseError.
AlgebraPtr build_instance(const nlohmann::json& doc);

/// Parses JSON text and builds the instance; JSON syntax errors are
/// reported as ParseError with 1-based line/column computed from the byte
/// offset.
AlgebraPtr parse_instance_text(const std::string& text);

}  // namespace alternator

#endif
