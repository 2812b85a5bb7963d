#pragma once

// Text syntax for word and crossed-product elements.
//
//   expr   := term (('+' | '-') term)*
//   term   := ('+' | '-')* factor (['*'] factor)*
//   factor := int ['/' int] | 'i' | letter | 's' | '(' expr ')'
//   letter := ('v' | 'u' | 'u*') '[' int ',' int ']'
//
// Orthogonal presentations use v[i,j]; au-star-star uses u[i,j] and u*[i,j]. In the
// crossed context "crossed:N", u[i,j] and u*[i,j] are the even symbols u_ij ⊗ 1 and
// ū_ij ⊗ 1, s is the group-like generator and v[i,j] stands for π(v_ij) = u_ij s.

#include <string>
#include <variant>

#include "halfcomm/crossed.hpp"
#include "halfcomm/words.hpp"

namespace halfcomm {

/// Either a word presentation or the crossed product over n x n symbols.
struct ExpressionContext {
  bool crossed = false;
  Presentation presentation;
  int n = 1;

  /// "ao-star:N", "ah-star:N", "au-star-star:N" or "crossed:N".
  static ExpressionContext parse(const std::string& text);
  std::string name() const;
};

/// Parses and normalizes. Throws ParseError (with position) on syntax errors and
/// UsageError on out-of-range indices or a star in an orthogonal presentation.
WordElement parse_word_expression(const std::string& text, const Presentation& p);
CrossedElement parse_crossed_expression(const std::string& text, int n);

using Expression = std::variant<WordElement, CrossedElement>;
Expression parse_expression(const std::string& text, const ExpressionContext& context);
std::string to_string(const Expression& e);

} // namespace halfcomm
