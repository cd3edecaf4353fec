#include "uniton/ratfun.hpp"

#include <sstream>

namespace uniton {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::InvalidArgument, "rational function with zero denominator");
  canonicalize();
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(GaussianRational(1));
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  if (!den_.leading().is_one()) {
    GaussianRational inv = den_.leading().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

GaussianRational RatFun::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::InvalidArgument, "rational function is not constant");
  return num_.coeff(0);
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero rational function");
  if (is_zero()) return *this;
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  canonicalize();
  return *this;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::conj() const {
  if (!is_constant())
    throw Error(ErrorKind::ExactKindUnsupported,
                "conjugation of a z-dependent rational function is not rational");
  return RatFun(num_.coeff(0).conj());
}

GaussianRational RatFun::eval(const GaussianRational& z0) const {
  GaussianRational d = den_.eval(z0);
  if (d.is_zero()) throw Error(ErrorKind::PoleAtZ, "pole of " + to_string() + " at z = " + z0.to_string());
  return num_.eval(z0) / d;
}

std::complex<double> RatFun::eval(std::complex<double> z0) const {
  if (is_constant()) return num_.coeff(0).to_complex();
  return eval(GaussianRational::from_complex(z0)).to_complex();
}

namespace {

std::string poly_to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const auto& c = p.coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = c.to_string();
    if (k == 0) {
      os << "(" << cs << ")";
    } else {
      if (!c.is_one()) os << "(" << cs << ")*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace

std::string RatFun::to_string() const {
  if (den_.is_constant()) return poly_to_string(num_);
  return "(" + poly_to_string(num_) + ")/(" + poly_to_string(den_) + ")";
}

RatFun differentiate(const RatFun& f) {
  if (f.is_polynomial()) return RatFun(f.num().derivative());
  // (n/d)' = (n'd - nd')/d^2
  const Poly& n = f.num();
  const Poly& d = f.den();
  return RatFun(n.derivative() * d - n * d.derivative(), d * d);
}

NonRationalAntiderivativeError::NonRationalAntiderivativeError(
    RatFun log_part, std::optional<GaussianRational> pole, const std::string& context)
    : Error(ErrorKind::NonRationalAntiderivative,
            context + (context.empty() ? "" : ": ") + "logarithmic part " + log_part.to_string() +
                (pole ? " has nonzero residue at z = " + pole->to_string() : " is nonzero")),
      log_part_(std::move(log_part)),
      pole_(std::move(pole)) {}

std::vector<Poly> squarefree_factorization(const Poly& p) {
  std::vector<Poly> out;
  if (p.degree() <= 0) return out;
  Poly a = p.monic();
  Poly da = a.derivative();
  Poly c = gcd(a, da);
  Poly w = a.divmod(c).first;
  Poly y = da.divmod(c).first;
  Poly z = y - w.derivative();
  while (w.degree() > 0) {
    Poly g = gcd(w, z);
    out.push_back(g);
    w = w.divmod(g).first;
    y = z.divmod(g).first;
    z = y - w.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

namespace {

// Solves s*a + t*b = c with deg s < deg b, assuming gcd(a, b) = 1.
std::pair<Poly, Poly> solve_bezout(const Poly& a, const Poly& b, const Poly& c) {
  auto eg = extended_gcd(a, b);
  if (eg.g.degree() != 0) throw Error(ErrorKind::InvalidArgument, "Bezout solve with non-coprime inputs");
  auto [q, r] = (eg.s * c).divmod(b);
  return {r, eg.t * c + q * a};
}

Poly pow(const Poly& p, int e) {
  Poly r(GaussianRational(1));
  for (int k = 0; k < e; ++k) r = r * p;
  return r;
}

Poly integrate_poly(const Poly& p) {
  std::vector<GaussianRational> c(p.coeffs().size() + 1);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    c[k + 1] = p.coeffs()[k] / GaussianRational(static_cast<long>(k + 1));
  return Poly(std::move(c));
}

}  // namespace

HermiteReduction hermite_reduce(const RatFun& f) {
  auto [q, a] = f.num().divmod(f.den());
  Poly d = f.den();
  RatFun g(integrate_poly(q));
  if (a.is_zero()) return {g, RatFun()};

  auto factors = squarefree_factorization(d);
  for (std::size_t idx = 1; idx < factors.size(); ++idx) {
    const int i = static_cast<int>(idx) + 1;
    const Poly& v = factors[idx];
    if (v.degree() <= 0) continue;
    Poly u = d.divmod(pow(v, i)).first;
    for (int j = i - 1; j >= 1; --j) {
      Poly rhs = a.scaled(GaussianRational(-1) / GaussianRational(static_cast<long>(j)));
      auto [b, c] = solve_bezout(u * v.derivative(), v, rhs);
      g += RatFun(b, pow(v, j));
      a = c.scaled(GaussianRational(static_cast<long>(-j))) - u * b.derivative();
    }
    d = u * v;
  }
  return {g, RatFun(a, d)};
}

RatFun integrate_rational(const RatFun& f) {
  auto h = hermite_reduce(f);
  if (!h.log_part.is_zero()) {
    std::optional<GaussianRational> pole;
    const Poly& d = h.log_part.den();
    if (d.degree() == 1) pole = -d.coeff(0);
    throw NonRationalAntiderivativeError(h.log_part, pole, "");
  }
  return h.rational_part;
}

}  // namespace uniton
