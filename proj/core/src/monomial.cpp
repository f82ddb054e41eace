#include "rankone/monomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "rankone/common.hpp"

namespace rankone {

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

long long binomial_ll(int n, int k) {
  Int b = binomial(n, k);
  if (b > Int(std::numeric_limits<long long>::max()))
    throw std::overflow_error("binomial_ll overflow");
  return static_cast<long long>(b);
}

VariableSet::VariableSet(int count, std::vector<int> precedence,
                         std::vector<int> position)
    : count_(count),
      precedence_(std::move(precedence)),
      position_(std::move(position)) {}

VariableSet VariableSet::identity(int count) {
  if (count < 0) throw std::invalid_argument("negative variable count");
  std::vector<int> prec(count);
  std::vector<int> pos(count + 1, -1);
  for (int i = 0; i < count; ++i) {
    prec[i] = i + 1;
    pos[i + 1] = i;
  }
  return VariableSet(count, std::move(prec), std::move(pos));
}

VariableSet VariableSet::with_precedence(std::vector<int> precedence) {
  const int n = static_cast<int>(precedence.size());
  std::vector<int> pos(n + 1, -1);
  for (int i = 0; i < n; ++i) {
    int v = precedence[i];
    if (v < 1 || v > n || pos[v] != -1)
      throw std::invalid_argument("precedence is not a permutation of [1,N]");
    pos[v] = i;
  }
  return VariableSet(n, std::move(precedence), std::move(pos));
}

int VariableSet::position(int v) const {
  if (v < 1 || v > count_)
    throw std::invalid_argument("variable index out of range");
  return position_[v];
}

VariableSet random_precedence(int count, std::mt19937_64& rng) {
  std::vector<int> prec(count);
  for (int i = 0; i < count; ++i) prec[i] = i + 1;
  for (int i = count - 1; i > 0; --i) {
    auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(prec[i], prec[j]);
  }
  return VariableSet::with_precedence(std::move(prec));
}

Monomial Monomial::variable(int var, int exp) {
  return from_exponents({{var, exp}});
}

Monomial Monomial::from_exponents(std::vector<std::pair<int, int>> exps) {
  std::sort(exps.begin(), exps.end());
  Monomial m;
  for (const auto& [v, e] : exps) {
    if (v < 1) throw std::invalid_argument("variable index must be >= 1");
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e == 0) continue;
    if (!m.exps_.empty() && m.exps_.back().first == v)
      m.exps_.back().second += e;
    else
      m.exps_.emplace_back(v, e);
    m.degree_ += e;
  }
  return m;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](const auto& p) { return p.second == 1; });
}

int Monomial::exponent(int var) const {
  auto it = std::lower_bound(exps_.begin(), exps_.end(),
                             std::make_pair(var, 0));
  return (it != exps_.end() && it->first == var) ? it->second : 0;
}

int Monomial::max_variable() const {
  return exps_.empty() ? 0 : exps_.back().first;
}

bool Monomial::divides(const Monomial& m) const {
  auto it = m.exps_.begin();
  for (const auto& [v, e] : exps_) {
    while (it != m.exps_.end() && it->first < v) ++it;
    if (it == m.exps_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

bool Monomial::coprime_to(const Monomial& m) const {
  auto a = exps_.begin();
  auto b = m.exps_.begin();
  while (a != exps_.end() && b != m.exps_.end()) {
    if (a->first == b->first) return false;
    if (a->first < b->first)
      ++a;
    else
      ++b;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
  if (!d.divides(*this))
    throw std::invalid_argument("monomial division is not exact");
  Monomial q;
  auto it = d.exps_.begin();
  for (const auto& [v, e] : exps_) {
    int sub = 0;
    while (it != d.exps_.end() && it->first < v) ++it;
    if (it != d.exps_.end() && it->first == v) sub = it->second;
    if (e > sub) {
      q.exps_.emplace_back(v, e - sub);
      q.degree_ += e - sub;
    }
  }
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto ia = a.exps_.begin();
  auto ib = b.exps_.begin();
  while (ia != a.exps_.end() || ib != b.exps_.end()) {
    if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first)) {
      r.exps_.push_back(*ia++);
    } else if (ia == a.exps_.end() || ib->first < ia->first) {
      r.exps_.push_back(*ib++);
    } else {
      r.exps_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  for (const auto& [v, e] : r.exps_) {
    (void)v;
    r.degree_ += e;
  }
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return a.exps_ <=> b.exps_;
}

std::string Monomial::str() const {
  if (exps_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : exps_) {
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::pair<int, int>> exps;
  auto ia = a.exponents().begin();
  auto ib = b.exponents().begin();
  while (ia != a.exponents().end() || ib != b.exponents().end()) {
    if (ib == b.exponents().end() ||
        (ia != a.exponents().end() && ia->first < ib->first)) {
      exps.push_back(*ia++);
    } else if (ia == a.exponents().end() || ib->first < ia->first) {
      exps.push_back(*ib++);
    } else {
      exps.emplace_back(ia->first, std::max(ia->second, ib->second));
      ++ia;
      ++ib;
    }
  }
  return Monomial::from_exponents(std::move(exps));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<std::pair<int, int>> exps;
  auto ia = a.exponents().begin();
  auto ib = b.exponents().begin();
  while (ia != a.exponents().end() && ib != b.exponents().end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      exps.emplace_back(ia->first, std::min(ia->second, ib->second));
      ++ia;
      ++ib;
    }
  }
  return Monomial::from_exponents(std::move(exps));
}

Ordering compare_degrevlex(const Monomial& a, const Monomial& b,
                           const VariableSet& vars) {
  if (a.max_variable() > vars.count() || b.max_variable() > vars.count())
    throw std::invalid_argument("variable index out of range for this order");
  if (a.degree() != b.degree())
    return a.degree() > b.degree() ? Ordering::Greater : Ordering::Less;

  // Rightmost nonzero entry of the exponent difference in precedence order.
  int last_pos = -1;
  int last_diff = 0;
  auto ia = a.exponents().begin();
  auto ib = b.exponents().begin();
  auto consider = [&](int var, int diff) {
    int p = vars.position(var);
    if (p > last_pos) {
      last_pos = p;
      last_diff = diff;
    }
  };
  while (ia != a.exponents().end() || ib != b.exponents().end()) {
    if (ib == b.exponents().end() ||
        (ia != a.exponents().end() && ia->first < ib->first)) {
      consider(ia->first, ia->second);
      ++ia;
    } else if (ia == a.exponents().end() || ib->first < ia->first) {
      consider(ib->first, -ib->second);
      ++ib;
    } else {
      if (ia->second != ib->second) consider(ia->first, ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  if (last_pos < 0) return Ordering::Equal;
  return last_diff < 0 ? Ordering::Greater : Ordering::Less;
}

bool degrevlex_less(const Monomial& a, const Monomial& b,
                    const VariableSet& vars) {
  return compare_degrevlex(a, b, vars) == Ordering::Less;
}

std::vector<Monomial> minimal_monomial_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (const auto& m : gens) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) minimal.push_back(m);
  }
  return minimal;
}

}  // namespace rankone
