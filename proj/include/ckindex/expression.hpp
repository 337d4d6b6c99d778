#pragma once

#include <ckindex/ck_algebra.hpp>

#include <string_view>

namespace ckindex {

/// Parses an element expression:
///
///   expr   := ["+"|"-"] term (("+"|"-") term)*
///   term   := coeff ["*"] factor ("*" factor)* | coeff | factor ("*" factor)*
///   factor := "S(" edge ")" | "p(" vertex ")" | "adj(" expr ")" | "(" expr ")"
///   coeff  := rational | rational "i" | "i" | "(" rational ("+"|"-") rational "i" ")"
///
/// A bare coefficient stands for that multiple of the unit 1 = sum_v p_v.
/// Throws ParseError (line 1, column in the message) on malformed input and
/// GraphError on unknown identifiers.
Element parse_expression(const GraphPtr& graph, std::string_view text);

}  // namespace ckindex
