#include "halfcomm/crossed.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include "halfcomm/errors.hpp"

namespace halfcomm {

// ---------------------------------------------------------------------------
// FunMonomial

FunMonomial::FunMonomial(int n) : n_(n), exps_(static_cast<std::size_t>(2 * n * n), 0) {
  if (n < 1) throw UsageError("symbol dimension must be positive");
}

std::size_t FunMonomial::index(const Symbol& s) const {
  if (s.row < 1 || s.row > n_ || s.col < 1 || s.col > n_)
    throw UsageError("symbol index [" + std::to_string(s.row) + "," + std::to_string(s.col) +
                     "] out of range for dimension " + std::to_string(n_));
  const auto nn = static_cast<std::size_t>(n_);
  return (s.conj ? nn * nn : 0) + static_cast<std::size_t>(s.row - 1) * nn + static_cast<std::size_t>(s.col - 1);
}

FunMonomial FunMonomial::symbol(int n, const Symbol& s) {
  FunMonomial m(n);
  ++m.exps_[m.index(s)];
  return m;
}

int FunMonomial::exponent(const Symbol& s) const { return exps_[index(s)]; }

std::size_t FunMonomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::size_t{0});
}

std::size_t FunMonomial::u_degree() const noexcept {
  const auto half = exps_.begin() + static_cast<std::ptrdiff_t>(exps_.size() / 2);
  return std::accumulate(exps_.begin(), half, std::size_t{0});
}

std::size_t FunMonomial::ubar_degree() const noexcept { return degree() - u_degree(); }

std::vector<Symbol> FunMonomial::expand() const {
  std::vector<Symbol> out;
  const auto nn = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
  for (std::size_t idx = 0; idx < exps_.size(); ++idx) {
    const bool conj = idx >= nn;
    const std::size_t local = conj ? idx - nn : idx;
    const Symbol s{static_cast<int>(local / static_cast<std::size_t>(n_)) + 1,
                   static_cast<int>(local % static_cast<std::size_t>(n_)) + 1, conj};
    for (int e = 0; e < exps_[idx]; ++e) out.push_back(s);
  }
  return out;
}

FunMonomial FunMonomial::bar() const {
  FunMonomial out = *this;
  const std::size_t half = exps_.size() / 2;
  for (std::size_t idx = 0; idx < half; ++idx) std::swap(out.exps_[idx], out.exps_[idx + half]);
  return out;
}

FunMonomial operator*(const FunMonomial& a, const FunMonomial& b) {
  if (a.n_ != b.n_) throw UsageError("symbol dimension mismatch in monomial product");
  FunMonomial out = a;
  for (std::size_t idx = 0; idx < out.exps_.size(); ++idx) out.exps_[idx] += b.exps_[idx];
  return out;
}

std::string FunMonomial::to_string() const {
  std::string out;
  for (const auto& s : expand()) {
    if (!out.empty()) out += ' ';
    out += (s.conj ? "u*[" : "u[") + std::to_string(s.row) + "," + std::to_string(s.col) + "]";
  }
  return out;
}

// ---------------------------------------------------------------------------
// FunElement

FunElement FunElement::constant(int n, const GaussianRational& c) {
  FunElement f(n);
  f.add_term(FunMonomial(n), c);
  return f;
}

FunElement FunElement::u(int n, int row, int col) {
  return monomial(FunMonomial::symbol(n, Symbol{row, col, false}));
}

FunElement FunElement::ubar(int n, int row, int col) {
  return monomial(FunMonomial::symbol(n, Symbol{row, col, true}));
}

FunElement FunElement::monomial(const FunMonomial& m, const GaussianRational& c) {
  FunElement f(m.dimension());
  f.add_term(m, c);
  return f;
}

std::size_t FunElement::degree() const noexcept {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void FunElement::check_dimension(int n) const {
  if (n != n_)
    throw UsageError("dimension mismatch: " + std::to_string(n_) + " vs " + std::to_string(n));
}

void FunElement::add_term(const FunMonomial& m, const GaussianRational& c) {
  check_dimension(m.dimension());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FunElement& FunElement::operator+=(const FunElement& o) {
  check_dimension(o.n_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FunElement& FunElement::operator-=(const FunElement& o) {
  check_dimension(o.n_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FunElement& FunElement::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

FunElement operator*(const FunElement& a, const FunElement& b) {
  a.check_dimension(b.n_);
  FunElement out(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

std::string FunElement::to_string() const {
  std::vector<std::pair<GaussianRational, std::string>> parts;
  for (const auto& [m, c] : terms_) parts.emplace_back(c, m.to_string());
  return format_linear_combination(parts);
}

FunElement bar_automorphism(const FunElement& f) {
  FunElement out(f.dimension());
  for (const auto& [m, c] : f.terms()) out.add_term(m.bar(), c);
  return out;
}

FunElement conjugate_coefficients(const FunElement& f) {
  FunElement out(f.dimension());
  for (const auto& [m, c] : f.terms()) out.add_term(m, c.conj());
  return out;
}

FunElement fun_star(const FunElement& f) {
  FunElement out(f.dimension());
  for (const auto& [m, c] : f.terms()) out.add_term(m.bar(), c.conj());
  return out;
}

FunElement fun_antipode(const FunElement& f) {
  const int n = f.dimension();
  FunElement out(n);
  for (const auto& [m, c] : f.terms()) {
    FunMonomial image(n);
    for (const auto& s : m.expand()) image = image * FunMonomial::symbol(n, Symbol{s.col, s.row, !s.conj});
    out.add_term(image, c);
  }
  return out;
}

namespace {

bool monomial_counit(const FunMonomial& m) {
  for (const auto& s : m.expand())
    if (s.row != s.col) return false;
  return true;
}

// Adds coeff · Δ(m) into `out`, splicing the two new legs between prefix and suffix.
template <class Basis, class Wrap>
void add_monomial_coproduct(const FunMonomial& m, const GaussianRational& coeff, std::size_t degree_cap,
                            const std::vector<Basis>& prefix, const std::vector<Basis>& suffix,
                            Wrap wrap, TensorSum<Basis>& out) {
  if (m.degree() > degree_cap)
    throw ResourceError("coproduct of a monomial of degree " + std::to_string(m.degree()) +
                        " exceeds the degree cap " + std::to_string(degree_cap));
  const int n = m.dimension();
  const auto symbols = m.expand();
  const std::size_t d = symbols.size();
  std::vector<int> k(d, 1);
  while (true) {
    FunMonomial left(n), right(n);
    for (std::size_t t = 0; t < d; ++t) {
      left = left * FunMonomial::symbol(n, Symbol{symbols[t].row, k[t], symbols[t].conj});
      right = right * FunMonomial::symbol(n, Symbol{k[t], symbols[t].col, symbols[t].conj});
    }
    std::vector<Basis> key = prefix;
    key.push_back(wrap(std::move(left)));
    key.push_back(wrap(std::move(right)));
    key.insert(key.end(), suffix.begin(), suffix.end());
    out.add(key, coeff);
    std::size_t t = 0;
    while (t < d && k[t] == n) k[t++] = 1;
    if (t == d) break;
    ++k[t];
  }
}

} // namespace

GaussianRational fun_counit(const FunElement& f) {
  GaussianRational total = 0;
  for (const auto& [m, c] : f.terms())
    if (monomial_counit(m)) total += c;
  return total;
}

FunTensor fun_coproduct(const FunElement& f, std::size_t degree_cap) {
  FunTensor out;
  for (const auto& [m, c] : f.terms())
    add_monomial_coproduct<FunMonomial>(m, c, degree_cap, {}, {}, [](FunMonomial x) { return x; }, out);
  return out;
}

// ---------------------------------------------------------------------------
// CrossedElement

CrossedElement::CrossedElement(FunElement f0, FunElement f1) : f0_(std::move(f0)), f1_(std::move(f1)) {
  if (f0_.dimension() != f1_.dimension()) throw UsageError("crossed components of different dimension");
}

CrossedElement CrossedElement::even(FunElement f) {
  const int n = f.dimension();
  return {std::move(f), FunElement(n)};
}

CrossedElement CrossedElement::odd(FunElement f) {
  const int n = f.dimension();
  return {FunElement(n), std::move(f)};
}

std::size_t CrossedElement::degree() const noexcept { return std::max(f0_.degree(), f1_.degree()); }

CrossedElement& CrossedElement::operator+=(const CrossedElement& o) {
  f0_ += o.f0_;
  f1_ += o.f1_;
  return *this;
}

CrossedElement& CrossedElement::operator-=(const CrossedElement& o) {
  f0_ -= o.f0_;
  f1_ -= o.f1_;
  return *this;
}

CrossedElement& CrossedElement::operator*=(const GaussianRational& c) {
  f0_ *= c;
  f1_ *= c;
  return *this;
}

std::string CrossedElement::to_string() const {
  std::vector<std::pair<GaussianRational, std::string>> parts;
  for (const auto& [m, c] : f0_.terms()) parts.emplace_back(c, m.to_string());
  for (const auto& [m, c] : f1_.terms()) {
    const std::string body = m.to_string();
    parts.emplace_back(c, body.empty() ? "s" : body + " s");
  }
  return format_linear_combination(parts);
}

CrossedElement crossed_mul(const CrossedElement& x, const CrossedElement& y) {
  if (x.dimension() != y.dimension()) throw UsageError("crossed_mul: dimension mismatch");
  FunElement f0 = x.f0() * y.f0() + x.f1() * bar_automorphism(y.f1());
  FunElement f1 = x.f0() * y.f1() + x.f1() * bar_automorphism(y.f0());
  return {std::move(f0), std::move(f1)};
}

CrossedElement crossed_pow(const CrossedElement& x, unsigned k) {
  CrossedElement out = CrossedElement::one(x.dimension());
  for (unsigned t = 0; t < k; ++t) out = crossed_mul(out, x);
  return out;
}

CrossedElement crossed_star(const CrossedElement& x) {
  return {fun_star(x.f0()), fun_star(bar_automorphism(x.f1()))};
}

CrossedElement crossed_antipode(const CrossedElement& x) {
  return {fun_antipode(x.f0()), bar_automorphism(fun_antipode(x.f1()))};
}

GaussianRational crossed_counit(const CrossedElement& x) { return fun_counit(x.f0()) + fun_counit(x.f1()); }

CrossedElement basis_element(const CrossedBasis& b, const GaussianRational& c) {
  FunElement f = FunElement::monomial(b.mono, c);
  return b.parity == 0 ? CrossedElement::even(std::move(f)) : CrossedElement::odd(std::move(f));
}

CrossedTensor as_tensor(const CrossedElement& x) {
  CrossedTensor out;
  for (const auto& [m, c] : x.f0().terms()) out.add({CrossedBasis{m, 0}}, c);
  for (const auto& [m, c] : x.f1().terms()) out.add({CrossedBasis{m, 1}}, c);
  return out;
}

CrossedTensor crossed_coproduct(const CrossedElement& x, std::size_t degree_cap) {
  return crossed_coproduct_on_leg(as_tensor(x), 0, degree_cap);
}

CrossedTensor crossed_coproduct_on_leg(const CrossedTensor& t, std::size_t leg, std::size_t degree_cap) {
  CrossedTensor out;
  for (const auto& [key, c] : t.terms()) {
    if (leg >= key.size()) throw UsageError("tensor leg out of range");
    const int parity = key[leg].parity;
    std::vector<CrossedBasis> prefix(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(leg));
    std::vector<CrossedBasis> suffix(key.begin() + static_cast<std::ptrdiff_t>(leg) + 1, key.end());
    add_monomial_coproduct<CrossedBasis>(
        key[leg].mono, c, degree_cap, prefix, suffix,
        [parity](FunMonomial m) { return CrossedBasis{std::move(m), parity}; }, out);
  }
  return out;
}

CrossedTensor crossed_counit_on_leg(const CrossedTensor& t, std::size_t leg) {
  CrossedTensor out;
  for (const auto& [key, c] : t.terms()) {
    if (leg >= key.size()) throw UsageError("tensor leg out of range");
    if (!monomial_counit(key[leg].mono)) continue;
    auto reduced = key;
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(leg));
    out.add(reduced, c);
  }
  return out;
}

CrossedElement multiply_legs(const CrossedTensor& t, int n, int antipode_leg) {
  CrossedElement out(n);
  for (const auto& [key, c] : t.terms()) {
    if (key.size() != 2) throw UsageError("multiply_legs expects a two-leg tensor");
    CrossedElement a = basis_element(key[0], c);
    CrossedElement b = basis_element(key[1]);
    if (antipode_leg == 0) a = crossed_antipode(a);
    if (antipode_leg == 1) b = crossed_antipode(b);
    out += crossed_mul(a, b);
  }
  return out;
}

CrossedElement embed_pi(const WordElement& x) {
  if (x.presentation().kind == PresentationKind::AuStarStar) return embed_pi(lift_to_orthogonal(x));
  const int n = x.presentation().n;
  FunElement f0(n), f1(n);
  for (const auto& [w, c] : x.terms()) {
    // u_a s u_b s u_c s ... = u_a ū_b u_c ... s^{|w|}
    FunMonomial m(n);
    for (std::size_t t = 0; t < w.size(); ++t)
      m = m * FunMonomial::symbol(n, Symbol{w[t].row, w[t].col, t % 2 == 1});
    (w.size() % 2 == 0 ? f0 : f1).add_term(m, c);
  }
  return {std::move(f0), std::move(f1)};
}

bool coinvariant_by_coproduct(const CrossedElement& x, std::size_t degree_cap) {
  const int n = x.dimension();
  const FunMonomial unit(n);
  CrossedTensor lhs;
  const CrossedTensor delta = crossed_coproduct(x, degree_cap);
  for (const auto& [key, c] : delta.terms()) {
    if (!monomial_counit(key[1].mono)) continue;
    lhs.add({key[0], CrossedBasis{unit, key[1].parity}}, c);
  }
  CrossedTensor rhs;
  const CrossedTensor plain = as_tensor(x);
  for (const auto& [key, c] : plain.terms()) rhs.add({key[0], CrossedBasis{unit, 0}}, c);
  return lhs == rhs;
}

bool coinvariant_by_parity(const CrossedElement& x) { return x.f1().is_zero(); }

bool coinvariant_test(const CrossedElement& x, std::size_t degree_cap) {
  const bool by_coproduct = coinvariant_by_coproduct(x, degree_cap);
  if (by_coproduct != coinvariant_by_parity(x))
    throw std::logic_error("coinvariant characterizations disagree on " + x.to_string());
  return by_coproduct;
}

FunElement pun_generator(int n, int i, int j, int k, int l) {
  for (int idx : {i, j, k, l})
    if (idx < 1 || idx > n) throw UsageError("pun_generator index out of range");
  return FunElement::u(n, i, k) * FunElement::ubar(n, j, l);
}

} // namespace halfcomm
