#pragma once

// The crossed product R(G) ⋊ CZ2 realized on pairs (f0, f1) standing for f0 ⊗ 1 + f1 ⊗ s,
// where f0, f1 are commutative *-polynomials in the coordinate symbols u_ij, ū_ij.
// Relations of R(G) (unitarity, subgroup equations) are not quotiented here; equality
// modulo them is decided by the haar module.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "halfcomm/gaussian_rational.hpp"
#include "halfcomm/tensor.hpp"
#include "halfcomm/words.hpp"

namespace halfcomm {

inline constexpr std::size_t kDefaultDegreeCap = 8;

/// A coordinate symbol u[row,col] or its conjugate ū[row,col] (printed u*[row,col]).
struct Symbol {
  int row = 1;
  int col = 1;
  bool conj = false;

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Commutative monomial in the 2n² symbols, stored as a dense exponent vector.
class FunMonomial {
public:
  FunMonomial() = default;
  explicit FunMonomial(int n);

  static FunMonomial symbol(int n, const Symbol& s);

  int dimension() const noexcept { return n_; }
  int exponent(const Symbol& s) const;
  std::size_t degree() const noexcept;
  std::size_t u_degree() const noexcept;
  std::size_t ubar_degree() const noexcept;

  /// Symbols with repetition, ū-symbols after u-symbols, each block in (row, col) order.
  std::vector<Symbol> expand() const;

  FunMonomial bar() const;
  friend FunMonomial operator*(const FunMonomial& a, const FunMonomial& b);
  friend auto operator<=>(const FunMonomial&, const FunMonomial&) = default;

  std::string to_string() const;

private:
  std::size_t index(const Symbol& s) const;

  int n_ = 0;
  std::vector<std::uint16_t> exps_;
};

/// Element of the free commutative *-algebra on u_ij, ū_ij with Q(i) coefficients.
class FunElement {
public:
  using Terms = std::map<FunMonomial, GaussianRational>;

  explicit FunElement(int n = 1) : n_(n) {}

  static FunElement constant(int n, const GaussianRational& c);
  static FunElement u(int n, int row, int col);
  static FunElement ubar(int n, int row, int col);
  static FunElement monomial(const FunMonomial& m, const GaussianRational& c = 1);

  int dimension() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t degree() const noexcept;

  void add_term(const FunMonomial& m, const GaussianRational& c);

  FunElement& operator+=(const FunElement& o);
  FunElement& operator-=(const FunElement& o);
  FunElement& operator*=(const GaussianRational& c);

  friend FunElement operator+(FunElement a, const FunElement& b) { return a += b; }
  friend FunElement operator-(FunElement a, const FunElement& b) { return a -= b; }
  friend FunElement operator*(FunElement a, const GaussianRational& c) { return a *= c; }
  friend FunElement operator*(const GaussianRational& c, FunElement a) { return a *= c; }
  friend FunElement operator*(const FunElement& a, const FunElement& b);
  friend bool operator==(const FunElement& a, const FunElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

private:
  void check_dimension(int n) const;

  int n_;
  Terms terms_;
};

/// The automorphism s: u_ij <-> ū_ij, coefficients untouched.
FunElement bar_automorphism(const FunElement& f);
/// *-structure of R(G): conjugate coefficients and swap u <-> ū.
FunElement fun_star(const FunElement& f);
/// Coefficient conjugation only.
FunElement conjugate_coefficients(const FunElement& f);
/// S(u_ij) = ū_ji, S(ū_ij) = u_ji, multiplicative.
FunElement fun_antipode(const FunElement& f);
/// ε(u_ij) = ε(ū_ij) = δ_ij.
GaussianRational fun_counit(const FunElement& f);

using FunTensor = TensorSum<FunMonomial>;
/// Δ(u_ij) = Σ_k u_ik ⊗ u_kj, Δ(ū_ij) = Σ_k ū_ik ⊗ ū_kj.
FunTensor fun_coproduct(const FunElement& f, std::size_t degree_cap = kDefaultDegreeCap);

/// f0 ⊗ 1 + f1 ⊗ s.
class CrossedElement {
public:
  explicit CrossedElement(int n = 1) : f0_(n), f1_(n) {}
  CrossedElement(FunElement f0, FunElement f1);

  static CrossedElement one(int n) { return {FunElement::constant(n, 1), FunElement(n)}; }
  static CrossedElement s(int n) { return {FunElement(n), FunElement::constant(n, 1)}; }
  static CrossedElement even(FunElement f);
  static CrossedElement odd(FunElement f);
  /// The generator u_ij s, image of v_ij under π.
  static CrossedElement generator(int n, int row, int col) { return odd(FunElement::u(n, row, col)); }

  int dimension() const noexcept { return f0_.dimension(); }
  const FunElement& f0() const noexcept { return f0_; }
  const FunElement& f1() const noexcept { return f1_; }
  bool is_zero() const noexcept { return f0_.is_zero() && f1_.is_zero(); }
  std::size_t degree() const noexcept;

  CrossedElement& operator+=(const CrossedElement& o);
  CrossedElement& operator-=(const CrossedElement& o);
  CrossedElement& operator*=(const GaussianRational& c);

  friend CrossedElement operator+(CrossedElement a, const CrossedElement& b) { return a += b; }
  friend CrossedElement operator-(CrossedElement a, const CrossedElement& b) { return a -= b; }
  friend CrossedElement operator*(CrossedElement a, const GaussianRational& c) { return a *= c; }
  friend CrossedElement operator*(const GaussianRational& c, CrossedElement a) { return a *= c; }
  friend bool operator==(const CrossedElement&, const CrossedElement&) = default;

  std::string to_string() const;

private:
  FunElement f0_;
  FunElement f1_;
};

/// (f ⊗ s^i)(g ⊗ s^j) = f s^i(g) ⊗ s^{i+j}.
CrossedElement crossed_mul(const CrossedElement& x, const CrossedElement& y);
inline CrossedElement operator*(const CrossedElement& x, const CrossedElement& y) { return crossed_mul(x, y); }
CrossedElement crossed_pow(const CrossedElement& x, unsigned k);
/// (f ⊗ s^i)^* = s^i(f)^* ⊗ s^i.
CrossedElement crossed_star(const CrossedElement& x);
/// S(f ⊗ s^i) = s^i(S(f)) ⊗ s^i.
CrossedElement crossed_antipode(const CrossedElement& x);
GaussianRational crossed_counit(const CrossedElement& x);

struct CrossedBasis {
  FunMonomial mono;
  int parity = 0;

  friend auto operator<=>(const CrossedBasis&, const CrossedBasis&) = default;
};

using CrossedTensor = TensorSum<CrossedBasis>;

CrossedElement basis_element(const CrossedBasis& b, const GaussianRational& c = 1);
CrossedTensor as_tensor(const CrossedElement& x);

/// Δ(f ⊗ s^i) = Σ f(1) ⊗ s^i ⊗ f(2) ⊗ s^i. Throws ResourceError beyond degree_cap.
CrossedTensor crossed_coproduct(const CrossedElement& x, std::size_t degree_cap = kDefaultDegreeCap);
CrossedTensor crossed_coproduct_on_leg(const CrossedTensor& t, std::size_t leg,
                                       std::size_t degree_cap = kDefaultDegreeCap);
CrossedTensor crossed_counit_on_leg(const CrossedTensor& t, std::size_t leg);
/// Collapses a two-leg tensor by multiplication, optionally applying S to one leg:
/// m(S ⊗ id) for antipode_leg = 0, m(id ⊗ S) for antipode_leg = 1, plain m otherwise.
CrossedElement multiply_legs(const CrossedTensor& t, int n, int antipode_leg = -1);

/// π: v_ij -> u_ij s. AuStarStar input is first lifted to AoStar(2n).
CrossedElement embed_pi(const WordElement& x);

/// (id ⊗ q)Δ(x) == x ⊗ 1, with q = ε ⊗ id onto CZ2.
bool coinvariant_by_coproduct(const CrossedElement& x, std::size_t degree_cap = kDefaultDegreeCap);
/// x lies in the even part.
bool coinvariant_by_parity(const CrossedElement& x);
/// Computes both characterizations; throws std::logic_error if they disagree.
bool coinvariant_test(const CrossedElement& x, std::size_t degree_cap = kDefaultDegreeCap);

/// w_{ij,kl} = u_ik ū_jl. Indices are 1-based.
FunElement pun_generator(int n, int i, int j, int k, int l);

} // namespace halfcomm
