#include <doctest.h>

#include <random>

#include "rankone/groebner.hpp"

using namespace rankone;

namespace {

Polynomial poly(std::vector<std::pair<int, std::vector<std::pair<int, int>>>>
                    coeff_exps,
                const VariableSet& vars) {
  std::vector<Term> terms;
  for (auto& [c, exps] : coeff_exps)
    terms.push_back(Term{c, Monomial::from_exponents(exps)});
  return Polynomial::from_terms(std::move(terms), vars);
}

Polynomial mul(const Polynomial& a, const Polynomial& b,
               const VariableSet& vars) {
  Polynomial out;
  for (const Term& t : a.terms()) out = add(out, mul_term(b, t), vars);
  return out;
}

}  // namespace

TEST_CASE("reduce: one division step") {
  auto vars = VariableSet::identity(3);
  // x1^2 x2 reduced by {x1^2 - x2} leaves x2^2
  Polynomial f = poly({{1, {{1, 2}, {2, 1}}}}, vars);
  Polynomial g = poly({{1, {{1, 2}}}, {-1, {{2, 1}}}}, vars);
  Polynomial r = reduce(f, {g}, vars);
  CHECK(r == poly({{1, {{2, 2}}}}, vars));
}

TEST_CASE("reduce: already in normal form") {
  auto vars = VariableSet::identity(3);
  Polynomial f = poly({{1, {{2, 1}}}, {1, {{3, 1}}}}, vars);
  Polynomial g = poly({{1, {{1, 2}}}, {-1, {{2, 1}}}}, vars);
  CHECK(reduce(f, {g}, vars) == f);
}

TEST_CASE("reduce: monomial against monomial divisor") {
  auto vars = VariableSet::identity(4);
  // x2 x3 x4 with x3 x4 in the divisor set
  Polynomial f = poly({{1, {{2, 1}, {3, 1}, {4, 1}}}}, vars);
  Polynomial g = poly({{1, {{3, 1}, {4, 1}}}}, vars);
  CHECK(reduce(f, {g}, vars).is_zero());
}

TEST_CASE("reduce trace re-expands to the input") {
  auto vars = VariableSet::identity(4);
  std::vector<Polynomial> G = {
      poly({{1, {{1, 2}}}, {-1, {{2, 1}}}}, vars),
      poly({{1, {{2, 1}, {3, 1}}}, {-1, {{4, 1}}}}, vars),
      poly({{1, {{3, 2}, {4, 1}}}}, vars),
  };
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Term> terms;
    int nterms = 1 + static_cast<int>(rng() % 5);
    for (int t = 0; t < nterms; ++t) {
      std::vector<std::pair<int, int>> exps;
      for (int v = 1; v <= 4; ++v) {
        int e = static_cast<int>(rng() % 3);
        if (e) exps.emplace_back(v, e);
      }
      int c = static_cast<int>(rng() % 7) - 3;
      terms.push_back(Term{c, Monomial::from_exponents(std::move(exps))});
    }
    Polynomial f = Polynomial::from_terms(std::move(terms), vars);
    ReductionTrace trace;
    Polynomial r = reduce(f, G, vars, &trace);
    Polynomial rebuilt = r;
    for (std::size_t i = 0; i < G.size(); ++i)
      rebuilt = add(rebuilt, mul(trace.quotients[i], G[i], vars), vars);
    CHECK(rebuilt == f);
    // no monomial of r is divisible by an initial monomial of G
    for (const Term& t : r.terms())
      for (const Polynomial& g : G)
        CHECK(!g.initial_monomial().divides(t.mono));
  }
}

TEST_CASE("s-polynomial of a sharing pair of 2x2 minors") {
  // Entries of a 3x3 matrix m11..m33 numbered row-major x1..x9, ordered so
  // that both minors lead with their NW*SE product.
  auto vars = VariableSet::with_precedence({1, 5, 9, 3, 7, 2, 4, 6, 8});
  Polynomial f = poly({{1, {{1, 1}, {5, 1}}}, {-1, {{2, 1}, {4, 1}}}}, vars);
  Polynomial g = poly({{1, {{5, 1}, {9, 1}}}, {-1, {{6, 1}, {8, 1}}}}, vars);
  REQUIRE(f.initial_monomial() ==
          Monomial::variable(1) * Monomial::variable(5));
  REQUIRE(g.initial_monomial() ==
          Monomial::variable(5) * Monomial::variable(9));
  Polynomial s = s_polynomial(f, g, vars);
  // m11 m23 m32 - m12 m21 m33
  Polynomial expected = poly(
      {{1, {{1, 1}, {6, 1}, {8, 1}}}, {-1, {{2, 1}, {4, 1}, {9, 1}}}}, vars);
  CHECK(s == expected);
}

TEST_CASE("s-polynomial degenerate cases") {
  auto vars = VariableSet::identity(3);
  Polynomial f = poly({{1, {{1, 1}, {2, 1}}}, {1, {{3, 2}}}}, vars);
  CHECK(s_polynomial(f, f, vars).is_zero());
  Polynomial m1 = poly({{1, {{1, 1}, {2, 1}}}}, vars);
  Polynomial m2 = poly({{1, {{2, 1}, {3, 1}}}}, vars);
  CHECK(s_polynomial(m1, m2, vars).is_zero());
}

TEST_CASE("buchberger_verify") {
  auto vars = VariableSet::identity(3);
  SUBCASE("single element is trivially a basis") {
    Polynomial g = poly({{1, {{1, 1}, {2, 1}}}, {-1, {{3, 2}}}}, vars);
    CHECK(buchberger_verify({g}, vars).ok);
  }
  SUBCASE("failing pair yields the certificate") {
    Polynomial g1 = poly({{1, {{1, 2}}}, {-1, {{2, 1}}}}, vars);
    Polynomial g2 = poly({{1, {{1, 2}}}, {-1, {{3, 1}}}}, vars);
    VerifyReport rep = buchberger_verify({g1, g2}, vars);
    CHECK(!rep.ok);
    REQUIRE(rep.failure.has_value());
    CHECK(rep.failure->i == 0);
    CHECK(rep.failure->j == 1);
    Polynomial pm = poly({{1, {{2, 1}}}, {-1, {{3, 1}}}}, vars);
    bool matches = rep.failure->remainder == pm ||
                   rep.failure->remainder == negated(pm);
    CHECK(matches);
  }
  SUBCASE("coprime pairs are skipped") {
    Polynomial g1 = poly({{1, {{1, 2}}}, {-1, {{2, 1}}}}, vars);
    Polynomial g2 = poly({{1, {{3, 2}}}, {-1, {{2, 1}}}}, vars);
    VerifyReport rep = buchberger_verify({g1, g2}, vars);
    CHECK(rep.ok);
    CHECK(rep.pairs_coprime_skipped == 1);
    CHECK(rep.pairs_reduced == 0);
  }
}

TEST_CASE("buchberger_complete produces the reduced basis") {
  auto vars = VariableSet::identity(3);
  Polynomial g1 = poly({{1, {{1, 2}}}, {-1, {{2, 1}}}}, vars);
  Polynomial g2 = poly({{1, {{1, 2}}}, {-1, {{3, 1}}}}, vars);
  auto basis = buchberger_complete({g1, g2}, vars);
  REQUIRE(basis.size() == 2);
  Polynomial x2x3 = poly({{1, {{2, 1}}}, {-1, {{3, 1}}}}, vars);
  CHECK(basis[0] == x2x3);
  CHECK(basis[1] == poly({{1, {{1, 2}}}, {-1, {{3, 1}}}}, vars));
  CHECK(buchberger_verify(basis, vars).ok);
  // reduced: monic initials, pairwise indivisible, normal-form tails
  for (std::size_t i = 0; i < basis.size(); ++i) {
    CHECK(basis[i].leading_term().coeff == 1);
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (i != j)
        CHECK(!basis[j].initial_monomial().divides(basis[i].initial_monomial()));
  }
}

TEST_CASE("complete keeps a reduced monomial basis unchanged") {
  auto vars = VariableSet::identity(4);
  std::vector<Polynomial> G = {
      poly({{1, {{1, 1}, {2, 1}}}}, vars),
      poly({{1, {{2, 1}, {3, 1}}}}, vars),
      poly({{1, {{3, 1}, {4, 1}}}}, vars),
  };
  auto basis = buchberger_complete(G, vars);
  REQUIRE(basis.size() == 3);
  for (const auto& g : G)
    CHECK(std::count(basis.begin(), basis.end(), g) == 1);
}

TEST_CASE("initial_ideal minimalizes") {
  auto vars = VariableSet::identity(4);
  SUBCASE("empty input") { CHECK(initial_ideal({}, vars).empty()); }
  SUBCASE("2x2 determinant, row-major order") {
    // x11 x22 - x12 x21 as x1 x4 - x2 x3; the rightmost variable x4 sits in
    // the diagonal term, so the antidiagonal product leads.
    Polynomial det = poly({{1, {{1, 1}, {4, 1}}}, {-1, {{2, 1}, {3, 1}}}}, vars);
    auto init = initial_ideal({det.resorted(vars)}, vars);
    REQUIRE(init.size() == 1);
    CHECK(init[0] == Monomial::variable(2) * Monomial::variable(3));
  }
}
