#include "halfcomm/words.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <optional>
#include <utility>

#include "halfcomm/errors.hpp"

namespace halfcomm {

namespace {

void validate_letter(const Letter& l, const Presentation& p) {
  if (l.row < 1 || l.row > p.n || l.col < 1 || l.col > p.n) {
    throw UsageError("generator index [" + std::to_string(l.row) + "," + std::to_string(l.col) +
                     "] out of range for " + p.name());
  }
  if (l.starred && p.orthogonal()) {
    throw UsageError("starred generator in orthogonal presentation " + p.name());
  }
}

Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool has_forbidden_adjacency(const Word& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (forbidden_pair(w[k], w[k + 1])) return true;
  return false;
}

// Normal form of w, or nothing when the word is zero in the presentation.
std::optional<Word> canonical_word(const Word& w, const Presentation& p) {
  if (p.kind == PresentationKind::AhStar && ah_zero_test(w, p)) return std::nullopt;
  return hc_normal_form(w);
}

} // namespace

Presentation Presentation::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("presentation must look like ao-star:N, got '" + text + "'");
  const std::string head = text.substr(0, colon);
  const std::string tail = text.substr(colon + 1);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
  if (ec != std::errc{} || ptr != tail.data() + tail.size() || n < 1)
    throw UsageError("invalid presentation dimension in '" + text + "'");
  if (head == "ao-star") return ao_star(n);
  if (head == "ah-star") return ah_star(n);
  if (head == "au-star-star") return au_star_star(n);
  throw UsageError("unknown presentation '" + head + "'");
}

std::string Presentation::name() const {
  switch (kind) {
  case PresentationKind::AoStar: return "ao-star:" + std::to_string(n);
  case PresentationKind::AhStar: return "ah-star:" + std::to_string(n);
  case PresentationKind::AuStarStar: return "au-star-star:" + std::to_string(n);
  }
  return {};
}

std::string format_letter(const Letter& l, const Presentation& p) {
  const std::string head = p.orthogonal() ? "v" : (l.starred ? "u*" : "u");
  return head + "[" + std::to_string(l.row) + "," + std::to_string(l.col) + "]";
}

std::string format_word(const Word& w, const Presentation& p) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += format_letter(l, p);
  }
  return out;
}

WordElement::WordElement(Presentation p, const Word& w, const GaussianRational& coeff) : pres_(p) {
  add_term(w, coeff);
}

void WordElement::add_term(const Word& w, const GaussianRational& coeff) {
  for (const auto& l : w) validate_letter(l, pres_);
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void WordElement::check_compatible(const WordElement& o) const {
  if (!(pres_ == o.pres_))
    throw UsageError("mixing elements of " + pres_.name() + " and " + o.pres_.name());
}

WordElement& WordElement::operator+=(const WordElement& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

WordElement& WordElement::operator-=(const WordElement& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

WordElement& WordElement::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

WordElement operator*(const WordElement& a, const WordElement& b) {
  a.check_compatible(b);
  WordElement out(a.pres_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(concat(wa, wb), ca * cb);
  return out;
}

std::string WordElement::to_string() const {
  std::vector<std::pair<GaussianRational, std::string>> parts;
  parts.reserve(terms_.size());
  for (const auto& [w, c] : terms_) parts.emplace_back(c, format_word(w, pres_));
  return format_linear_combination(parts);
}

Word hc_normal_form(const Word& w) {
  if (w.size() < 3) return w;
  Word odd, even;
  for (std::size_t k = 0; k < w.size(); ++k) (k % 2 == 0 ? odd : even).push_back(w[k]);
  std::sort(odd.begin(), odd.end());
  std::sort(even.begin(), even.end());
  Word out(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out[k] = (k % 2 == 0) ? odd[k / 2] : even[k / 2];
  return out;
}

bool forbidden_pair(const Letter& x, const Letter& y) {
  return (x.row == y.row && x.col != y.col) || (x.col == y.col && x.row != y.row);
}

bool ah_zero_test(const Word& w, const Presentation& p) {
  if (p.kind != PresentationKind::AhStar)
    throw UsageError("ah_zero_test requires an ah-star presentation, got " + p.name());
  // Each parity class can be permuted freely, so any odd-class letter can be made
  // adjacent to any even-class letter, in either order.
  for (std::size_t a = 0; a < w.size(); a += 2)
    for (std::size_t b = 1; b < w.size(); b += 2)
      if (forbidden_pair(w[a], w[b])) return true;
  return false;
}

WordElement normalize_element(const WordElement& x) {
  WordElement out(x.presentation());
  for (const auto& [w, c] : x.terms())
    if (auto nf = canonical_word(w, x.presentation())) out.add_term(*nf, c);
  return out;
}

WordElement star_element(const WordElement& x) {
  const Presentation& p = x.presentation();
  WordElement out(p);
  for (const auto& [w, c] : x.terms()) {
    Word r(w.rbegin(), w.rend());
    if (!p.orthogonal())
      for (auto& l : r) l.starred = !l.starred;
    out.add_term(r, c.conj());
  }
  return normalize_element(out);
}

namespace {

// Σ over k-tuples of (v_{i1 k1}...v_{im km}) ⊗ (v_{k1 j1}...v_{km jm}), legs normalized.
void add_word_coproduct(const Word& w, const GaussianRational& coeff, const Presentation& p,
                        std::size_t degree_cap, const std::vector<Word>& prefix,
                        const std::vector<Word>& suffix, WordTensor& out) {
  if (w.size() > degree_cap)
    throw ResourceError("coproduct of a word of length " + std::to_string(w.size()) +
                        " exceeds the degree cap " + std::to_string(degree_cap));
  const std::size_t m = w.size();
  std::vector<int> k(m, 1);
  Word left(m), right(m);
  while (true) {
    for (std::size_t t = 0; t < m; ++t) {
      left[t] = Letter{w[t].row, k[t], w[t].starred};
      right[t] = Letter{k[t], w[t].col, w[t].starred};
    }
    auto l = canonical_word(left, p);
    auto r = canonical_word(right, p);
    if (l && r) {
      std::vector<Word> key = prefix;
      key.push_back(std::move(*l));
      key.push_back(std::move(*r));
      key.insert(key.end(), suffix.begin(), suffix.end());
      out.add(key, coeff);
    }
    std::size_t t = 0;
    while (t < m && k[t] == p.n) k[t++] = 1;
    if (t == m) break;
    ++k[t];
  }
}

} // namespace

WordTensor coproduct_element(const WordElement& x, std::size_t degree_cap) {
  return coproduct_on_leg(as_tensor(x), x.presentation(), 0, degree_cap);
}

WordTensor coproduct_on_leg(const WordTensor& t, const Presentation& p, std::size_t leg,
                            std::size_t degree_cap) {
  WordTensor out;
  for (const auto& [key, c] : t.terms()) {
    if (leg >= key.size()) throw UsageError("tensor leg out of range");
    const auto canon = canonical_word(key[leg], p);
    if (!canon) continue;
    std::vector<Word> prefix(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(leg));
    std::vector<Word> suffix(key.begin() + static_cast<std::ptrdiff_t>(leg) + 1, key.end());
    add_word_coproduct(*canon, c, p, degree_cap, prefix, suffix, out);
  }
  return out;
}

namespace {

bool word_counit(const Word& w) {
  return std::all_of(w.begin(), w.end(), [](const Letter& l) { return l.row == l.col; });
}

} // namespace

GaussianRational counit_element(const WordElement& x) {
  GaussianRational total = 0;
  const WordElement normal = normalize_element(x);
  for (const auto& [w, c] : normal.terms())
    if (word_counit(w)) total += c;
  return total;
}

WordTensor counit_on_leg(const WordTensor& t, std::size_t leg) {
  WordTensor out;
  for (const auto& [key, c] : t.terms()) {
    if (leg >= key.size()) throw UsageError("tensor leg out of range");
    if (!word_counit(key[leg])) continue;
    std::vector<Word> reduced = key;
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(leg));
    out.add(reduced, c);
  }
  return out;
}

WordTensor as_tensor(const WordElement& x) {
  WordTensor out;
  const WordElement normal = normalize_element(x);
  for (const auto& [w, c] : normal.terms()) out.add({w}, c);
  return out;
}

WordElement antipode_element(const WordElement& x) {
  const Presentation& p = x.presentation();
  WordElement out(p);
  for (const auto& [w, c] : x.terms()) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      r.push_back(Letter{it->col, it->row, p.orthogonal() ? false : !it->starred});
    out.add_term(r, c);
  }
  return normalize_element(out);
}

ClosureResult rewrite_closure_oracle(const Word& w, const Presentation& p, std::size_t max_size) {
  ClosureResult result;
  std::deque<Word> queue{w};
  result.words.insert(w);
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    if (p.kind == PresentationKind::AhStar && has_forbidden_adjacency(cur)) result.reaches_zero = true;
    for (std::size_t k = 0; k + 2 < cur.size(); ++k) {
      if (cur[k] == cur[k + 2]) continue;
      Word next = cur;
      std::swap(next[k], next[k + 2]);
      if (result.words.insert(next).second) {
        if (result.words.size() > max_size)
          throw ResourceError("rewrite closure exceeds " + std::to_string(max_size) + " words");
        queue.push_back(std::move(next));
      }
    }
  }
  return result;
}

std::vector<Word> enumerate_words(const Presentation& p, std::size_t max_len) {
  std::vector<Letter> alphabet;
  for (int r = 1; r <= p.n; ++r)
    for (int c = 1; c <= p.n; ++c) {
      alphabet.push_back(Letter{r, c, false});
      if (!p.orthogonal()) alphabet.push_back(Letter{r, c, true});
    }
  std::sort(alphabet.begin(), alphabet.end());
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k)
      for (const auto& l : alphabet) {
        Word w = out[k];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

WordElement lift_to_orthogonal(const WordElement& x) {
  const Presentation& p = x.presentation();
  if (p.kind != PresentationKind::AuStarStar)
    throw UsageError("lift_to_orthogonal expects an au-star-star element, got " + p.name());
  const Presentation target = Presentation::ao_star(2 * p.n);
  const GaussianRational i = GaussianRational::imaginary_unit();
  WordElement out(target);
  for (const auto& [w, c] : x.terms()) {
    WordElement acc = WordElement::scalar(target, c);
    for (const auto& l : w) {
      WordElement image = WordElement::generator(target, l.row, l.col) +
                          WordElement::generator(target, p.n + l.row, l.col) * (l.starred ? -i : i);
      acc = acc * image;
    }
    out += acc;
  }
  return normalize_element(out);
}

} // namespace halfcomm
