#include "heckelab/jet_laurent_poly.hpp"

#include <sstream>

#include "heckelab/errors.hpp"

namespace heckelab {

namespace {

void require_same_jet(const JetLaurentPoly& a, const JetLaurentPoly& b) {
  if (a.jet_order() != b.jet_order()) {
    throw DomainError("jet order mismatch between operands");
  }
}

}  // namespace

JetLaurentPoly::JetLaurentPoly(int jet_order) : jet_order_(jet_order) {
  if (jet_order < 0) throw DomainError("negative jet order");
}

JetLaurentPoly JetLaurentPoly::constant(int jet_order, const Scalar& c) {
  return monomial(jet_order, 0, 0, c);
}

JetLaurentPoly JetLaurentPoly::monomial(int jet_order, long t_exp, int x_exp,
                                        const Scalar& c) {
  JetLaurentPoly p(jet_order);
  p.add_term(t_exp, x_exp, c);
  return p;
}

Scalar JetLaurentPoly::coeff(long t_exp, int x_exp) const {
  auto it = terms_.find(Monomial{t_exp, x_exp});
  return it == terms_.end() ? Scalar() : it->second;
}

void JetLaurentPoly::add_term(long t_exp, int x_exp, const Scalar& c) {
  if (x_exp < 0) throw DomainError("negative x exponent");
  if (c.is_zero() || x_exp > jet_order_) return;
  Monomial key{t_exp, x_exp};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

JetLaurentPoly JetLaurentPoly::operator-() const {
  JetLaurentPoly out(jet_order_);
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
  return out;
}

JetLaurentPoly& JetLaurentPoly::operator+=(const JetLaurentPoly& o) {
  require_same_jet(*this, o);
  for (const auto& [mono, c] : o.terms_) add_term(mono.t_exp, mono.x_exp, c);
  return *this;
}

JetLaurentPoly& JetLaurentPoly::operator-=(const JetLaurentPoly& o) {
  require_same_jet(*this, o);
  for (const auto& [mono, c] : o.terms_) add_term(mono.t_exp, mono.x_exp, -c);
  return *this;
}

JetLaurentPoly operator*(const JetLaurentPoly& a, const JetLaurentPoly& b) {
  require_same_jet(a, b);
  JetLaurentPoly out(a.jet_order());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.x_exp + mb.x_exp > out.jet_order()) continue;
      out.add_term(ma.t_exp + mb.t_exp, ma.x_exp + mb.x_exp, ca * cb);
    }
  }
  return out;
}

JetLaurentPoly JetLaurentPoly::times_scalar(const Scalar& c) const {
  JetLaurentPoly out(jet_order_);
  if (c.is_zero()) return out;
  for (const auto& [mono, coeff] : terms_) {
    out.add_term(mono.t_exp, mono.x_exp, coeff * c);
  }
  return out;
}

JetLaurentPoly JetLaurentPoly::times_t(long k) const {
  JetLaurentPoly out(jet_order_);
  for (const auto& [mono, c] : terms_) out.terms_.emplace(Monomial{mono.t_exp + k, mono.x_exp}, c);
  return out;
}

JetLaurentPoly JetLaurentPoly::times_x() const {
  JetLaurentPoly out(jet_order_);
  for (const auto& [mono, c] : terms_) {
    if (mono.x_exp + 1 > jet_order_) continue;
    out.terms_.emplace(Monomial{mono.t_exp, mono.x_exp + 1}, c);
  }
  return out;
}

JetLaurentPoly JetLaurentPoly::divide_by_x() const {
  JetLaurentPoly out(jet_order_);
  for (const auto& [mono, c] : terms_) {
    if (mono.x_exp == 0) {
      throw DomainError("not divisible by defining function");
    }
    out.terms_.emplace(Monomial{mono.t_exp, mono.x_exp - 1}, c);
  }
  return out;
}

JetLaurentPoly JetLaurentPoly::substitute_x_zero() const {
  JetLaurentPoly out(0);
  for (const auto& [mono, c] : terms_) {
    if (mono.x_exp == 0) out.terms_.emplace(mono, c);
  }
  return out;
}

JetLaurentPoly JetLaurentPoly::with_jet_order(int jet_order) const {
  JetLaurentPoly out(jet_order);
  for (const auto& [mono, c] : terms_) {
    if (mono.x_exp <= jet_order) out.terms_.emplace(mono, c);
  }
  return out;
}

bool JetLaurentPoly::x_free() const {
  for (const auto& [mono, c] : terms_) {
    if (mono.x_exp != 0) return false;
  }
  return true;
}

bool JetLaurentPoly::polynomial_in_t() const {
  for (const auto& [mono, c] : terms_) {
    if (mono.t_exp < 0) return false;
  }
  return true;
}

bool JetLaurentPoly::polynomial_in_t_inverse() const {
  for (const auto& [mono, c] : terms_) {
    if (mono.t_exp > 0) return false;
  }
  return true;
}

bool JetLaurentPoly::is_nonzero_constant() const {
  return terms_.size() == 1 &&
         terms_.begin()->first == Monomial{0, 0};
}

long JetLaurentPoly::min_t_exp() const {
  if (terms_.empty()) throw DomainError("degree of zero polynomial");
  return terms_.begin()->first.t_exp;
}

long JetLaurentPoly::max_t_exp() const {
  if (terms_.empty()) throw DomainError("degree of zero polynomial");
  return terms_.rbegin()->first.t_exp;
}

std::string JetLaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << scalar_to_string(c) << ")";
    if (mono.t_exp != 0) out << "*t^" << mono.t_exp;
    if (mono.x_exp != 0) out << "*x^" << mono.x_exp;
  }
  return out.str();
}

}  // namespace heckelab
