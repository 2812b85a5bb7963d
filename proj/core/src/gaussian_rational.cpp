#include "halfcomm/gaussian_rational.hpp"

#include <ostream>
#include <utility>

#include "halfcomm/errors.hpp"

namespace halfcomm {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long p, long q) {
  if (q == 0) throw UsageError("zero denominator in rational literal");
  mpq_class r(p, q);
  r.canonicalize();
  return {r, 0};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const mpq_class d = o.norm_squared();
  if (sgn(d) == 0) throw UsageError("division by zero Gaussian rational");
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  const auto imag_part = [](const mpq_class& v) {
    return v == 1 ? std::string("i") : v.get_str() + " i";
  };
  if (sgn(re_) == 0) return sgn(im_) > 0 ? imag_part(im_) : "-" + imag_part(-im_);
  const std::string sep = sgn(im_) > 0 ? " + " : " - ";
  return re_.get_str() + sep + imag_part(abs(im_));
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

std::string format_linear_combination(
    const std::vector<std::pair<GaussianRational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, body] : terms) {
    bool negative = false;
    std::string coeff;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      const mpq_class mag = abs(c.re());
      if (!(mag == 1 && !body.empty())) coeff = mag.get_str();
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      const mpq_class mag = abs(c.im());
      coeff = mag == 1 ? "i" : mag.get_str() + " i";
    } else {
      coeff = body.empty() ? c.to_string() : "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += coeff;
    if (!coeff.empty() && !body.empty()) out += " ";
    out += body;
  }
  return out;
}

} // namespace halfcomm
