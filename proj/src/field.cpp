#include "diotrip/field.hpp"

#include <sstream>
#include <stdexcept>

namespace diotrip {

namespace {

constexpr unsigned long kTrialDivisionBound = 100000;

bool has_square_factor_below_bound(const mpz_class& n) {
  mpz_class m = abs(n);
  for (unsigned long p = 2; p <= kTrialDivisionBound; p = (p == 2) ? 3 : p + 2) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p * p)) return true;
    if (mpz_class(p) * p > m) break;
  }
  return false;
}

}  // namespace

FieldSpec FieldSpec::quadratic(const mpz_class& d) {
  if (d == 0 || d == 1)
    throw std::invalid_argument("quadratic radicand must not be 0 or 1");
  if (has_square_factor_below_bound(d))
    throw std::invalid_argument("quadratic radicand must be squarefree");
  return {FieldTag::quadratic, d};
}

std::string FieldSpec::name() const {
  switch (tag) {
    case FieldTag::rational:
      return "Q";
    case FieldTag::zeta3:
      return "Q_zeta3";
    case FieldTag::quadratic:
      return "Q_sqrt:" + d.get_str();
  }
  return "Q";
}

FieldSpec FieldSpec::parse(const std::string& name) {
  if (name == "Q") return rationals();
  if (name == "Q_zeta3") return cyclotomic3();
  const std::string prefix = "Q_sqrt:";
  if (name.rfind(prefix, 0) == 0) {
    mpz_class d;
    try {
      d = mpz_class(name.substr(prefix.size()));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad radicand in field name '" + name + "'");
    }
    return quadratic(d);
  }
  throw std::invalid_argument("unknown field name '" + name + "'");
}

FieldSpec merge_specs(const FieldSpec& x, const FieldSpec& y) {
  if (x.is_rational()) return y;
  if (y.is_rational() || x == y) return x;
  throw std::invalid_argument("elements of distinct extensions " + x.name() +
                              " and " + y.name() + " cannot be combined");
}

FieldElement::FieldElement(const FieldSpec& spec, const mpq_class& a, const mpq_class& b)
    : a_(a), b_(b), spec_(spec) {
  if (spec_.is_rational() && b_ != 0)
    throw std::invalid_argument("rational element with nonzero extension part");
  normalize();
}

void FieldElement::normalize() {
  if (b_ == 0) spec_ = FieldSpec::rationals();
}

const mpq_class& FieldElement::as_rational() const {
  if (b_ != 0) throw std::domain_error("element is not rational: " + str());
  return a_;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  FieldElement r;
  r.spec_ = merge_specs(spec_, o.spec_);
  r.a_ = a_ + o.a_;
  r.b_ = b_ + o.b_;
  r.normalize();
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  FieldElement r;
  r.spec_ = merge_specs(spec_, o.spec_);
  switch (r.spec_.tag) {
    case FieldTag::rational:
      r.a_ = a_ * o.a_;
      break;
    case FieldTag::quadratic:
      r.a_ = a_ * o.a_ + mpq_class(r.spec_.d) * b_ * o.b_;
      r.b_ = a_ * o.b_ + b_ * o.a_;
      break;
    case FieldTag::zeta3:
      // (a1 + b1 t)(a2 + b2 t) with t^2 = -t - 1
      r.a_ = a_ * o.a_ - b_ * o.b_;
      r.b_ = a_ * o.b_ + b_ * o.a_ - b_ * o.b_;
      break;
  }
  r.normalize();
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero field element");
  if (is_rational()) {
    FieldElement r;
    r.a_ = 1 / a_;
    return r;
  }
  mpq_class n = norm();
  if (n == 0) throw std::domain_error("zero norm in extension inverse");
  FieldElement c = conjugate();
  c.a_ /= n;
  c.b_ /= n;
  return c;
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::conjugate() const {
  FieldElement r = *this;
  switch (spec_.tag) {
    case FieldTag::rational:
      break;
    case FieldTag::quadratic:
      r.b_ = -r.b_;
      break;
    case FieldTag::zeta3:
      // conj(a + b t) = a + b t^2 = (a - b) - b t
      r.a_ = a_ - b_;
      r.b_ = -b_;
      break;
  }
  return r;
}

mpq_class FieldElement::norm() const {
  switch (spec_.tag) {
    case FieldTag::rational:
      return a_ * a_;
    case FieldTag::quadratic:
      return a_ * a_ - mpq_class(spec_.d) * b_ * b_;
    case FieldTag::zeta3:
      return a_ * a_ - a_ * b_ + b_ * b_;
  }
  return a_ * a_;
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (b_ == 0 && o.b_ == 0) return a_ == o.a_;
  return spec_ == o.spec_ && a_ == o.a_ && b_ == o.b_;
}

int FieldElement::cmp(const FieldElement& o) const {
  int c = ::cmp(a_, o.a_);
  if (c != 0) return c < 0 ? -1 : 1;
  c = ::cmp(b_, o.b_);
  if (c != 0) return c < 0 ? -1 : 1;
  if (b_ == 0) return 0;  // both rational-valued, tags already normalized away
  if (spec_.tag != o.spec_.tag)
    return static_cast<int>(spec_.tag) < static_cast<int>(o.spec_.tag) ? -1 : 1;
  c = ::cmp(spec_.d, o.spec_.d);
  return c == 0 ? 0 : (c < 0 ? -1 : 1);
}

namespace {

// Nonnegative rational square root of q if q is a perfect square.
std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  if (q == 0) return mpq_class(0);
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return mpq_class(rn) / mpq_class(rd);
}

}  // namespace

bool rational_is_square(const mpq_class& q, mpq_class* root) {
  auto r = rational_sqrt(q);
  if (!r) return false;
  if (root) *root = *r;
  return true;
}

namespace {

// Square root of a + b*tau inside the field named by spec; elements whose
// extension part vanishes still get the extension-aware search when spec
// names an extension.
std::optional<FieldElement> sqrt_in(const FieldSpec& spec, const mpq_class& a,
                                    const mpq_class& b) {
  if (a == 0 && b == 0) return FieldElement();
  if (spec.is_rational()) {
    auto r = rational_sqrt(a);
    if (!r) return std::nullopt;
    return FieldElement(*r);
  }
  const FieldElement x(spec, a, b);
  if (spec.tag == FieldTag::quadratic) {
    const mpq_class d(spec.d);
    if (b == 0) {
      if (auto r = rational_sqrt(a)) return FieldElement(*r);
      if (auto r = rational_sqrt(a / d)) return FieldElement(spec, 0, *r);
      return std::nullopt;
    }
    auto s = rational_sqrt(a * a - d * b * b);
    if (!s) return std::nullopt;
    for (int sign : {1, -1}) {
      mpq_class usq = (a + sign * *s) / 2;
      auto u = rational_sqrt(usq);
      if (!u || *u == 0) continue;
      mpq_class v = b / (2 * *u);
      FieldElement y(spec, *u, v);
      if (y * y == x) return y;
    }
    return std::nullopt;
  }
  // zeta3: y = u + v t, y^2 = (u^2 - v^2) + v(2u - v) t
  if (b == 0) {
    if (auto r = rational_sqrt(a)) return FieldElement(*r);
    // a = -3u^2 has root u(1 + 2 zeta3)
    if (auto u = rational_sqrt(-a / 3)) return FieldElement(spec, *u, 2 * *u);
    return std::nullopt;
  }
  auto s = rational_sqrt(a * a - a * b + b * b);
  if (!s) return std::nullopt;
  for (int sign : {1, -1}) {
    mpq_class vsq = (b - 2 * a + sign * 2 * *s) / 3;
    auto v = rational_sqrt(vsq);
    if (!v || *v == 0) continue;
    mpq_class u = (b + vsq) / (2 * *v);
    FieldElement y(spec, u, *v);
    if (y * y == x) return y;
  }
  return std::nullopt;
}

}  // namespace

std::optional<FieldElement> FieldElement::sqrt() const { return sqrt_in(spec_, a_, b_); }

std::optional<FieldElement> field_sqrt(const FieldElement& x, const FieldSpec& ctx) {
  return sqrt_in(merge_specs(x.spec(), ctx), x.rational_part(), x.extension_part());
}

std::string FieldElement::str() const {
  std::ostringstream out;
  if (b_ == 0) {
    out << a_;
    return out.str();
  }
  const char* unit = spec_.tag == FieldTag::zeta3 ? "z" : "w";
  if (a_ != 0) out << a_ << (b_ > 0 ? "+" : "");
  if (b_ == 1)
    out << unit;
  else if (b_ == -1)
    out << "-" << unit;
  else
    out << b_ << "*" << unit;
  return out.str();
}

mpz_class squarefree_kernel(const mpz_class& n) {
  if (n == 0) throw std::domain_error("squarefree kernel of zero");
  mpz_class m = abs(n);
  mpz_class kernel = n < 0 ? -1 : 1;
  for (unsigned long p = 2; p <= kTrialDivisionBound && m > 1; p = (p == 2) ? 3 : p + 2) {
    if (mpz_class(p) * p > m) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e % 2 == 1) kernel *= p;
  }
  if (m > 1) {
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      // even part, contributes nothing
    } else {
      kernel *= m;  // treated as squarefree; exact unless a square prime
                    // factor above the trial bound survives
    }
  }
  return kernel;
}

void squarefree_split(const mpq_class& q, mpz_class& lambda, mpq_class& s) {
  if (q == 0) throw std::domain_error("squarefree split of zero");
  lambda = squarefree_kernel(q.get_num() * q.get_den());
  mpq_class rest = q / mpq_class(lambda);
  mpq_class root;
  if (!rational_is_square(rest, &root))
    throw std::logic_error("squarefree split failed; square part exceeds trial bound");
  s = root;
}

mpq_class make_rational(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace diotrip
