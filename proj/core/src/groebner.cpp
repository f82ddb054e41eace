#include "rankone/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace rankone {

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G,
                  const VariableSet& vars, ReductionTrace* trace) {
  for (const auto& g : G)
    if (g.is_zero())
      throw std::invalid_argument("zero polynomial in divisor set");
  if (trace) trace->quotients.assign(G.size(), Polynomial());

  std::vector<Term> remainder;
  Polynomial h = f;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    bool divided = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      const Term& glt = G[i].leading_term();
      if (!glt.mono.divides(lt.mono)) continue;
      Term q{lt.coeff / glt.coeff, lt.mono.divided_by(glt.mono)};
      h = sub(h, mul_term(G[i], q), vars);
      if (trace)
        trace->quotients[i] =
            add(trace->quotients[i], Polynomial::single(q.coeff, q.mono), vars);
      divided = true;
      break;
    }
    if (!divided) {
      remainder.push_back(lt);
      h = h.tail();
    }
  }
  // The leading monomial strictly decreases at every step, so the collected
  // remainder terms are already sorted.
  return Polynomial::from_terms(std::move(remainder), vars);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const VariableSet& vars) {
  const Term& fl = f.leading_term();
  const Term& gl = g.leading_term();
  Monomial L = lcm(fl.mono, gl.mono);
  Term tf{Rational(1) / fl.coeff, L.divided_by(fl.mono)};
  Term tg{Rational(1) / gl.coeff, L.divided_by(gl.mono)};
  return sub(mul_term(f, tf), mul_term(g, tg), vars);
}

VerifyReport buchberger_verify(const std::vector<Polynomial>& G,
                               const VariableSet& vars) {
  VerifyReport report;
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      ++report.pairs_total;
      if (G[i].initial_monomial().coprime_to(G[j].initial_monomial())) {
        ++report.pairs_coprime_skipped;
        continue;
      }
      ++report.pairs_reduced;
      Polynomial r = reduce(s_polynomial(G[i], G[j], vars), G, vars);
      if (!r.is_zero()) {
        report.ok = false;
        report.failure = PairFailure{i, j, std::move(r)};
        return report;
      }
    }
  }
  return report;
}

namespace {

// (lcm degree, i, j): the normal selection strategy.
using Pending = std::tuple<int, std::size_t, std::size_t>;

Pending make_pending(const std::vector<Polynomial>& G, std::size_t i,
                     std::size_t j) {
  Monomial L = lcm(G[i].initial_monomial(), G[j].initial_monomial());
  return {L.degree(), i, j};
}

}  // namespace

std::vector<Polynomial> buchberger_complete(const std::vector<Polynomial>& G0,
                                            const VariableSet& vars) {
  std::vector<Polynomial> G;
  for (const auto& g : G0) {
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    G.push_back(g);
  }

  std::set<Pending> pending;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      pending.insert(make_pending(G, i, j));

  while (!pending.empty()) {
    auto [deg, i, j] = *pending.begin();
    (void)deg;
    pending.erase(pending.begin());
    if (G[i].initial_monomial().coprime_to(G[j].initial_monomial())) continue;
    Polynomial r = reduce(s_polynomial(G[i], G[j], vars), G, vars);
    if (r.is_zero()) continue;
    G.push_back(monic(r));
    std::size_t k = G.size() - 1;
    for (std::size_t p = 0; p < k; ++p) pending.insert(make_pending(G, p, k));
  }

  // Minimalize: keep only generators whose initial monomial is not divisible
  // by another kept one. Processing by ascending initial keeps divisors.
  std::vector<std::size_t> idx(G.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return degrevlex_less(G[a].initial_monomial(), G[b].initial_monomial(),
                          vars);
  });
  std::vector<Polynomial> minimal;
  for (std::size_t id : idx) {
    const Monomial& m = G[id].initial_monomial();
    bool redundant =
        std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& g) {
          return g.initial_monomial().divides(m);
        });
    if (!redundant) minimal.push_back(G[id]);
  }

  // Inter-reduce. Initial monomials are pairwise non-divisible, so a full
  // reduction against the others keeps the leading term and normalizes the
  // tail; one pass suffices because the initials never change.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = monic(reduce(minimal[i], others, vars));
  }
  return minimal;
}

std::vector<Monomial> initial_ideal(const std::vector<Polynomial>& G,
                                    const VariableSet& vars) {
  (void)vars;
  std::vector<Monomial> initials;
  initials.reserve(G.size());
  for (const auto& g : G) {
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    initials.push_back(g.initial_monomial());
  }
  return minimal_monomial_generators(std::move(initials));
}

}  // namespace rankone
