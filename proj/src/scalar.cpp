#include "hyperops/scalar.hpp"

#include <cctype>
#include <ostream>

#include "hyperops/errors.hpp"

namespace hyperops {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// INT[/INT] with an optional leading '-' (or '+' when allow_plus).
mpq_class parse_rational(std::string_view token, std::string_view whole, bool allow_plus) {
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || (allow_plus && body.front() == '+'))) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw ParseError("malformed scalar '" + std::string(whole) + "': bad token '" +
                     std::string(token) + "'");
  mpz_class n{std::string(num)};
  mpz_class d = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den));
  if (d == 0)
    throw ParseError("malformed scalar '" + std::string(whole) + "': zero denominator in '" +
                     std::string(token) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::fraction(long num, long den, long im_num, long im_den) {
  if (den == 0 || im_den == 0) throw ArithmeticError("zero denominator");
  return Scalar(mpq_class(num, den), mpq_class(im_num, im_den));
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("malformed scalar: empty text");

  if (s.back() != 'i') return Scalar(parse_rational(s, text, false), 0);

  std::string_view body = s.substr(0, s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);

  mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(re_part, text, false);
  mpq_class im;
  if (im_part.empty() || im_part == "+")
    im = 1;
  else if (im_part == "-")
    im = -1;
  else
    im = parse_rational(im_part, text, split != std::string_view::npos);
  return Scalar(re, im);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inv();
}

std::string Scalar::str() const {
  if (sgn(im_) == 0) return rational_str(re_);
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = rational_str(im_) + "i";
  if (sgn(re_) == 0) return imag;
  if (imag.front() != '-') imag.insert(imag.begin(), '+');
  return rational_str(re_) + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace hyperops
