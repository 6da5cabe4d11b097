// Wire format for the values the command-line tool passes around: a JSON
// document holding exactly one of a triple, a pair, a parameter array, or a
// module spec.  Rationals travel as "p" / "p/q" strings and matrices as
// row-major nested lists of those, so parsing a serialized value recovers it
// bit for bit.
#pragma once

#include <string>
#include <variant>

#include "bidiag/matrix.hpp"
#include "bidiag/modules.hpp"
#include "bidiag/triple.hpp"

namespace bidiag {

struct TripleDocument {
    Matrix a, a_prime, a_double;
    bool operator==(const TripleDocument&) const = default;
};

struct PairDocument {
    Matrix a, a_prime;
    bool operator==(const PairDocument&) const = default;
};

using Document = std::variant<TripleDocument, PairDocument, ParameterArray, ModuleSpec>;

// Two-space indented JSON with a fixed key order.
std::string serialize_document(const Document& doc);

// The top level must be an object with exactly one of the keys "triple",
// "pair", "parameter_array", "module_spec"; unknown or missing inner keys
// are rejected, as are non-square matrices in triple/pair documents.
// ParseError on any malformed input.
Document parse_document(const std::string& text);

}  // namespace bidiag
