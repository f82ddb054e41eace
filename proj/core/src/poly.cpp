#include "rankone/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rankone {

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coeff != b.terms_[i].coeff ||
        !(a.terms_[i].mono == b.terms_[i].mono))
      return false;
  return true;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms,
                                  const VariableSet& vars) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compare_degrevlex(a.mono, b.mono, vars) == Ordering::Greater;
  });
  Polynomial f;
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coeff += t.coeff;
      if (f.terms_.back().coeff == 0) f.terms_.pop_back();
    } else {
      f.terms_.push_back(std::move(t));
    }
  }
  return f;
}

Polynomial Polynomial::single(Rational coeff, Monomial mono) {
  Polynomial f;
  if (coeff != 0) f.terms_.push_back(Term{std::move(coeff), std::move(mono)});
  return f;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::invalid_argument("zero polynomial");
  return terms_.front();
}

const Monomial& Polynomial::initial_monomial() const {
  return leading_term().mono;
}

Polynomial Polynomial::tail() const {
  Polynomial f;
  if (terms_.size() > 1) f.terms_.assign(terms_.begin() + 1, terms_.end());
  return f;
}

Polynomial Polynomial::resorted(const VariableSet& vars) const {
  return from_terms(terms_, vars);
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (t.coeff > 0 && !s.empty()) s += " + ";
    if (t.coeff < 0) s += s.empty() ? "-" : " - ";
    Rational a = abs(t.coeff);
    if (a != 1 || t.mono.is_one()) {
      s += a.str();
      if (!t.mono.is_one()) s += "*";
    }
    if (!t.mono.is_one()) s += t.mono.str();
  }
  return s;
}

Polynomial add(const Polynomial& a, const Polynomial& b,
               const VariableSet& vars) {
  Polynomial r;
  r.terms_.reserve(a.size() + b.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end()) {
      r.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end()) {
      r.terms_.push_back(*ib++);
    } else {
      switch (compare_degrevlex(ia->mono, ib->mono, vars)) {
        case Ordering::Greater:
          r.terms_.push_back(*ia++);
          break;
        case Ordering::Less:
          r.terms_.push_back(*ib++);
          break;
        case Ordering::Equal: {
          Rational c = ia->coeff + ib->coeff;
          if (c != 0) r.terms_.push_back(Term{std::move(c), ia->mono});
          ++ia;
          ++ib;
          break;
        }
      }
    }
  }
  return r;
}

Polynomial sub(const Polynomial& a, const Polynomial& b,
               const VariableSet& vars) {
  return add(a, negated(b), vars);
}

Polynomial mul_term(const Polynomial& f, const Term& t) {
  Polynomial r;
  if (t.coeff == 0) return r;
  r.terms_.reserve(f.size());
  for (const auto& ft : f.terms_)
    r.terms_.push_back(Term{ft.coeff * t.coeff, ft.mono * t.mono});
  return r;
}

Polynomial negated(const Polynomial& f) {
  Polynomial r = f;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial monic(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  Polynomial r = f;
  const Rational lc = r.terms_.front().coeff;
  for (auto& t : r.terms_) t.coeff /= lc;
  return r;
}

}  // namespace rankone
