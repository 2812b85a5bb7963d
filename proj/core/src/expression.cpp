#include "halfcomm/expression.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "halfcomm/errors.hpp"

namespace halfcomm {

namespace {

enum class LetterHead { V, U, UStar };

struct WordAlgebra {
  using Value = WordElement;
  Presentation p;

  Value scalar(const GaussianRational& c) const { return WordElement::scalar(p, c); }

  Value letter(LetterHead head, int row, int col, std::size_t pos) const {
    if (p.orthogonal()) {
      if (head == LetterHead::UStar) throw UsageError("starred generator in orthogonal presentation " + p.name() +
                                                      " at position " + std::to_string(pos));
      if (head == LetterHead::U) throw ParseError("expected v[i,j] in " + p.name(), pos);
    } else if (head == LetterHead::V) {
      throw ParseError("expected u[i,j] or u*[i,j] in " + p.name(), pos);
    }
    return WordElement::generator(p, row, col, head == LetterHead::UStar);
  }

  Value s(std::size_t pos) const { throw ParseError("'s' is only available in the crossed context", pos); }
};

struct CrossedAlgebra {
  using Value = CrossedElement;
  int n;

  Value scalar(const GaussianRational& c) const { return CrossedElement::one(n) * c; }

  Value letter(LetterHead head, int row, int col, std::size_t pos) const {
    if (row < 1 || row > n || col < 1 || col > n)
      throw UsageError("generator index [" + std::to_string(row) + "," + std::to_string(col) +
                       "] out of range for crossed:" + std::to_string(n) + " at position " + std::to_string(pos));
    switch (head) {
    case LetterHead::V: return CrossedElement::generator(n, row, col);
    case LetterHead::U: return CrossedElement::even(FunElement::u(n, row, col));
    case LetterHead::UStar: return CrossedElement::even(FunElement::ubar(n, row, col));
    }
    return Value(n);
  }

  Value s(std::size_t) const { return CrossedElement::s(n); }
};

template <class Algebra>
class Parser {
public:
  using Value = typename Algebra::Value;

  Parser(const std::string& text, Algebra algebra) : text_(text), alg_(std::move(algebra)) {}

  Value run() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("expected '+', '-', '*' or end of input", pos_);
    return v;
  }

private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == 'v' || c == 'u' || c == 's' || c == '(';
  }

  Value expr() {
    Value v = term();
    while (true) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        v += term();
      } else if (c == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  Value term() {
    bool negative = false;
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      negative ^= c == '-';
      ++pos_;
    }
    Value v = factor();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        v = v * factor();
      } else if (starts_factor(c)) {
        v = v * factor();
      } else {
        break;
      }
    }
    if (negative) v *= GaussianRational(-1);
    return v;
  }

  long integer() {
    skip_space();
    long value = 0;
    const char* begin = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec == std::errc::result_out_of_range) throw ParseError("integer too large", pos_);
    if (ec != std::errc{}) throw ParseError("expected an integer", pos_);
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  int index() {
    const std::size_t at = pos_;
    const long v = integer();
    if (v > std::numeric_limits<int>::max()) throw ParseError("index too large", at);
    return static_cast<int>(v);
  }

  Value factor() {
    const char c = peek();
    const std::size_t at = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long num = integer();
      long den = 1;
      if (peek() == '/') {
        ++pos_;
        const std::size_t den_at = pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", den_at);
      }
      return alg_.scalar(GaussianRational::fraction(num, den));
    }
    if (c == 'i') {
      ++pos_;
      return alg_.scalar(GaussianRational::imaginary_unit());
    }
    if (c == 's') {
      ++pos_;
      return alg_.s(at);
    }
    if (c == '(') {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (c == 'v' || c == 'u') {
      ++pos_;
      LetterHead head = c == 'v' ? LetterHead::V : LetterHead::U;
      if (c == 'u' && pos_ < text_.size() && text_[pos_] == '*') {
        // u*[ is a starred letter; u * x is a product.
        std::size_t look = pos_ + 1;
        while (look < text_.size() && std::isspace(static_cast<unsigned char>(text_[look]))) ++look;
        if (look < text_.size() && text_[look] == '[') {
          head = LetterHead::UStar;
          pos_ = look;
        }
      }
      if (pos_ >= text_.size() || text_[pos_] != '[') throw ParseError("expected '[' after generator name", pos_);
      ++pos_;
      const int row = index();
      expect(',');
      const int col = index();
      expect(']');
      return alg_.letter(head, row, col, at);
    }
    if (c == '\0') throw ParseError("unexpected end of input, expected a factor", pos_);
    throw ParseError(std::string("unexpected '") + c + "', expected a number, i, a generator, s or '('", pos_);
  }

  const std::string& text_;
  Algebra alg_;
  std::size_t pos_ = 0;
};

} // namespace

ExpressionContext ExpressionContext::parse(const std::string& text) {
  ExpressionContext ctx;
  if (text.rfind("crossed:", 0) == 0) {
    const std::string tail = text.substr(8);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
    if (ec != std::errc{} || ptr != tail.data() + tail.size() || n < 1)
      throw UsageError("invalid crossed dimension in '" + text + "'");
    ctx.crossed = true;
    ctx.n = n;
    ctx.presentation = Presentation::ao_star(n);
    return ctx;
  }
  ctx.presentation = Presentation::parse(text);
  ctx.n = ctx.presentation.n;
  return ctx;
}

std::string ExpressionContext::name() const {
  return crossed ? "crossed:" + std::to_string(n) : presentation.name();
}

WordElement parse_word_expression(const std::string& text, const Presentation& p) {
  return normalize_element(Parser<WordAlgebra>(text, WordAlgebra{p}).run());
}

CrossedElement parse_crossed_expression(const std::string& text, int n) {
  if (n < 1) throw UsageError("crossed context needs n >= 1");
  return Parser<CrossedAlgebra>(text, CrossedAlgebra{n}).run();
}

Expression parse_expression(const std::string& text, const ExpressionContext& context) {
  if (context.crossed) return parse_crossed_expression(text, context.n);
  return parse_word_expression(text, context.presentation);
}

std::string to_string(const Expression& e) {
  return std::visit([](const auto& x) { return x.to_string(); }, e);
}

} // namespace halfcomm
