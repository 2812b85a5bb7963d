#pragma once

// Free *-algebra on matrix-entry generators modulo half-commutation abc = cba,
// with the optional hyperoctahedral zero relations v_ij v_ik = 0 = v_ki v_ji (j != k).

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "halfcomm/gaussian_rational.hpp"
#include "halfcomm/tensor.hpp"

namespace halfcomm {

enum class PresentationKind {
  AoStar,     ///< half-liberated orthogonal, generators v_ij
  AhStar,     ///< half-liberated hyperoctahedral, adds the zero relations
  AuStarStar, ///< half-commutative unitary, generators u_ij and u_ij^*
};

struct Presentation {
  PresentationKind kind = PresentationKind::AoStar;
  int n = 1;

  static Presentation ao_star(int n) { return {PresentationKind::AoStar, n}; }
  static Presentation ah_star(int n) { return {PresentationKind::AhStar, n}; }
  static Presentation au_star_star(int n) { return {PresentationKind::AuStarStar, n}; }

  /// Parses "ao-star:N", "ah-star:N" or "au-star-star:N".
  static Presentation parse(const std::string& text);

  bool orthogonal() const noexcept { return kind != PresentationKind::AuStarStar; }
  std::string name() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Generator v[row,col] (or u[row,col], u*[row,col] when starred). Indices are 1-based.
struct Letter {
  int row = 1;
  int col = 1;
  bool starred = false;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

std::string format_letter(const Letter& l, const Presentation& p);
std::string format_word(const Word& w, const Presentation& p);

/// Finite Q(i)-linear combination of words in a fixed presentation.
/// The empty word is the unit.
class WordElement {
public:
  using Terms = std::map<Word, GaussianRational>;

  explicit WordElement(Presentation p) : pres_(p) {}
  WordElement(Presentation p, const Word& w, const GaussianRational& coeff = 1);

  static WordElement scalar(Presentation p, const GaussianRational& c) { return {p, Word{}, c}; }
  static WordElement generator(Presentation p, int row, int col, bool starred = false) {
    return {p, Word{Letter{row, col, starred}}};
  }

  const Presentation& presentation() const noexcept { return pres_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds coeff·w, validating the letters against the presentation.
  void add_term(const Word& w, const GaussianRational& coeff);

  WordElement& operator+=(const WordElement& o);
  WordElement& operator-=(const WordElement& o);
  WordElement& operator*=(const GaussianRational& c);

  friend WordElement operator+(WordElement a, const WordElement& b) { return a += b; }
  friend WordElement operator-(WordElement a, const WordElement& b) { return a -= b; }
  friend WordElement operator*(WordElement a, const GaussianRational& c) { return a *= c; }
  friend WordElement operator*(const GaussianRational& c, WordElement a) { return a *= c; }
  /// Concatenation product; not normalized.
  friend WordElement operator*(const WordElement& a, const WordElement& b);

  /// Term-map equality (callers normalize first when comparing in the quotient).
  friend bool operator==(const WordElement& a, const WordElement& b) {
    return a.pres_ == b.pres_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

private:
  void check_compatible(const WordElement& o) const;

  Presentation pres_;
  Terms terms_;
};

/// Canonical representative of the half-commutation class of w: a rewrite
/// abc -> cba only swaps letters two apart, so the class is fixed by the length and
/// the multisets of odd- and even-position letters. Both are sorted and re-interleaved.
Word hc_normal_form(const Word& w);

/// Whether w vanishes in A_h^*(n). Throws UsageError unless p is AhStar.
bool ah_zero_test(const Word& w, const Presentation& p);

WordElement normalize_element(const WordElement& x);
WordElement star_element(const WordElement& x);

using WordTensor = TensorSum<Word>;

/// Δ(v_ij) = Σ_k v_ik ⊗ v_kj extended multiplicatively; both legs normalized.
/// Throws ResourceError when a word is longer than degree_cap.
WordTensor coproduct_element(const WordElement& x, std::size_t degree_cap = 8);
GaussianRational counit_element(const WordElement& x);
WordElement antipode_element(const WordElement& x);

/// Applies Δ to leg `leg` of every pure tensor, raising the arity by one.
WordTensor coproduct_on_leg(const WordTensor& t, const Presentation& p, std::size_t leg,
                            std::size_t degree_cap = 8);
/// Applies ε to leg `leg`, lowering the arity by one.
WordTensor counit_on_leg(const WordTensor& t, std::size_t leg);
/// Embeds a single element as a one-leg tensor.
WordTensor as_tensor(const WordElement& x);

struct ClosureResult {
  std::set<Word> words;
  /// AhStar only: some reachable word contains a forbidden adjacent pair.
  bool reaches_zero = false;
};

/// Breadth-first closure of w under single rewrites abc <-> cba. Throws ResourceError
/// once more than max_size words are discovered.
ClosureResult rewrite_closure_oracle(const Word& w, const Presentation& p, std::size_t max_size);

/// True iff (x, y) is an adjacent pair killed by the hyperoctahedral relations.
bool forbidden_pair(const Letter& x, const Letter& y);

/// Every word of length <= max_len over the presentation's letters, shortest first.
std::vector<Word> enumerate_words(const Presentation& p, std::size_t max_len);

/// A_u^{**}(n) -> A_o^*(2n): u_ij -> x_ij + i x_{n+i,j}, u_ij^* -> x_ij - i x_{n+i,j}.
WordElement lift_to_orthogonal(const WordElement& x);

} // namespace halfcomm
