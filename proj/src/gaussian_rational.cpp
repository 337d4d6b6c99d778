#include <ckindex/gaussian_rational.hpp>

#include <stdexcept>

namespace ckindex {

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
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  const Rational norm = b.re_ * b.re_ + b.im_ * b.im_;
  GaussianRational q = a * b.conj();
  return {q.re_ / norm, q.im_ / norm};
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  const bool neg = sgn(im_) < 0;
  const Rational mag = neg ? Rational(-im_) : im_;
  return "(" + re_.get_str() + (neg ? "-" : "+") + mag.get_str() + "i)";
}

}  // namespace ckindex
