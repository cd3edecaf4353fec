#include "uniton/gaussian_rational.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>

#include "uniton/errors.hpp"

namespace uniton {

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero in Q(i)");
  Rational n = norm();
  return {re_ / n, -im_ / n};
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
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw Error(ErrorKind::InvalidArgument, "division by zero in Q(i)");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

GaussianRational GaussianRational::from_complex(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw Error(ErrorKind::InvalidArgument, "non-finite complex value");
  Rational re, im;
  mpq_set_d(re.get_mpq_t(), z.real());
  mpq_set_d(im.get_mpq_t(), z.imag());
  return {re, im};
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::SchemaError, "empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorKind::SchemaError, "malformed rational literal '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return rational_to_string(re_);
  std::string imag = rational_to_string(abs(im_)) + "i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return rational_to_string(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw Error(ErrorKind::SchemaError, "empty scalar literal");
  if (s.back() != 'i') return {parse_rational(s), 0};
  s.pop_back();
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    std::string im = s;
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {0, parse_rational(im)};
  }
  std::string im = s.substr(split);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return {parse_rational(s.substr(0, split)), parse_rational(im)};
}

}  // namespace uniton

namespace uniton {

double rational_to_double(const Rational& q) {
  const double t = q.get_d();  // truncated towards zero
  if (sgn(q) == 0 || std::isinf(t)) return t;
  const double away = std::nextafter(t, sgn(q) > 0 ? HUGE_VAL : -HUGE_VAL);
  if (std::isinf(away)) return t;
  const Rational dt = abs(q - Rational(t));
  const Rational da = abs(Rational(away) - q);
  if (dt < da) return t;
  if (da < dt) return away;
  std::int64_t bits;
  std::memcpy(&bits, &t, sizeof bits);
  return (bits & 1) ? away : t;
}

std::complex<double> GaussianRational::to_complex() const { return {rational_to_double(re_), rational_to_double(im_)}; }

}  // namespace uniton
