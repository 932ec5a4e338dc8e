#include <gtest/gtest.h>

#include <random>

#include "exhopf/groebner.hpp"
#include "exhopf/poly_io.hpp"
#include "exhopf/weight_steenrod.hpp"

using namespace exhopf;

namespace {

RingPtr g2_ring() { return RingContext::make(2, {{"w1", 1}, {"w2", 1}}); }

void monomials_of_weight(const RingContext& R, unsigned w, std::size_t i, std::vector<unsigned>& e,
                         std::vector<Monomial>& out) {
  if (i == R.size()) {
    if (w == 0) out.push_back(R.make_monomial(e));
    return;
  }
  for (unsigned k = 0; k * R.variable(i).weight <= w; ++k) {
    e[i] = k;
    monomials_of_weight(R, w - k * R.variable(i).weight, i + 1, e, out);
  }
  e[i] = 0;
}

std::vector<Monomial> monomials_of_weight(const RingContext& R, unsigned w) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(R.size(), 0);
  monomials_of_weight(R, w, 0, e, out);
  return out;
}

// Independent oracle: f lies in the homogeneous ideal iff it is in the span of
// all m*g of the right weight.
bool in_ideal_linear_algebra(const Polynomial& f, const std::vector<Polynomial>& gens) {
  if (f.is_zero()) return true;
  const RingPtr& R = f.ring();
  const auto& F = R->field();
  unsigned w = *f.weight();
  std::vector<Monomial> basis = monomials_of_weight(*R, w);
  auto column = [&](const Monomial& m) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == m) return i;
    throw std::logic_error("monomial outside basis");
  };
  auto to_row = [&](const Polynomial& g) {
    std::vector<Coeff> row(basis.size(), 0);
    for (auto& t : g.terms()) row[column(t.monomial)] = t.coeff;
    return row;
  };
  std::vector<std::vector<Coeff>> rows;
  for (auto& g : gens) {
    if (g.is_zero() || *g.weight() > w) continue;
    for (auto& m : monomials_of_weight(*R, w - *g.weight())) rows.push_back(to_row(g.mul_term(m, 1)));
  }
  auto rank = [&](std::vector<std::vector<Coeff>> M) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < basis.size() && r < M.size(); ++c) {
      std::size_t piv = r;
      while (piv < M.size() && M[piv][c] == 0) ++piv;
      if (piv == M.size()) continue;
      std::swap(M[r], M[piv]);
      Coeff inv = F.inv(M[r][c]);
      for (auto& x : M[r]) x = F.mul(x, inv);
      for (std::size_t i = 0; i < M.size(); ++i) {
        if (i == r || M[i][c] == 0) continue;
        Coeff a = M[i][c];
        for (std::size_t k = 0; k < basis.size(); ++k) M[i][k] = F.sub(M[i][k], F.mul(a, M[r][k]));
      }
      ++r;
    }
    return r;
  };
  std::size_t before = rank(rows);
  rows.push_back(to_row(f));
  return rank(rows) == before;
}

Polynomial random_homogeneous(const RingPtr& R, unsigned w, std::mt19937& rng, unsigned density = 3) {
  auto ms = monomials_of_weight(*R, w);
  std::vector<Term> t;
  std::uniform_int_distribution<unsigned> c(0, R->p() - 1);
  for (auto& m : ms)
    if (rng() % density == 0) t.push_back({m, c(rng)});
  return Polynomial::from_terms(R, t);
}

bool divisible_by_leading(const Monomial& m, const GroebnerBasis& gb) {
  for (auto& g : gb.basis)
    if (gb.ring->divides(g.leading_term().monomial, m)) return true;
  return false;
}

}  // namespace

TEST(Groebner, PrincipalMonomialIdeal) {
  auto R = RingContext::make(2, {{"x", 1}, {"y", 1}});
  auto gb = buchberger({parse("x", R)}, 6);
  ASSERT_EQ(gb.basis.size(), 1u);
  EXPECT_EQ(gb.basis[0], parse("x", R));
  EXPECT_TRUE(normal_form(parse("x*y^2+x^3", R), gb).remainder.is_zero());
}

TEST(Groebner, EmptyGenerators) {
  auto R = g2_ring();
  auto gb = buchberger({}, 5, R);
  EXPECT_TRUE(gb.basis.empty());
  auto f = parse("w1^2*w2+w2^3", R);
  EXPECT_EQ(normal_form(f, gb).remainder, f);
}

TEST(Groebner, G2TotalSquare) {
  auto R = g2_ring();
  auto theta2 = parse("w1^2+w1*w2+w2^2", R);
  auto theta3 = parse("w2^3", R);
  auto gb = buchberger({theta2}, 3);
  auto lhs = weight_power(1, theta2);
  EXPECT_TRUE(normal_form(lhs - theta3 - parse("w1", R) * theta2, gb).remainder.is_zero());
  EXPECT_EQ(solve_linear_coefficient(lhs, theta3, gb), 1u);
  EXPECT_TRUE(normal_form(theta2, gb).remainder.is_zero());
}

TEST(Groebner, SolverEdgeCases) {
  auto R = g2_ring();
  auto theta2 = parse("w1^2+w1*w2+w2^2", R);
  auto gb = buchberger({theta2}, 3);
  EXPECT_EQ(solve_linear_coefficient(Polynomial(R), parse("w2^3", R), gb), 0u);
  EXPECT_THROW(solve_linear_coefficient(parse("w1*w2^2", R), parse("w1*w2^2+w1^2*w2", R), gb), NoSolution);
  EXPECT_THROW(solve_linear_coefficient(parse("w1*w2^2", R), parse("w1", R) * theta2, gb), NoSolution);
  EXPECT_THROW(solve_linear_coefficient(Polynomial(R), parse("w1", R) * theta2, gb), Ambiguous);
}

TEST(Groebner, Errors) {
  auto R = g2_ring();
  EXPECT_THROW(buchberger({parse("w1^2+w2", R)}, 4), GroebnerError);
  auto gb = buchberger({parse("w1^2", R)}, 3);
  EXPECT_THROW(normal_form(parse("w2^4", R), gb), GroebnerError);
  EXPECT_THROW(normal_form(parse("w1", RingContext::make(3, {{"w1", 1}, {"w2", 1}})), gb), RingError);
}

TEST(Groebner, BasisIsReducedAndMonic) {
  std::mt19937 rng(11);
  for (unsigned p : {2u, 3u, 5u}) {
    auto R = RingContext::make(p, {{"c2", 2}, {"c3", 3}, {"c4", 4}, {"w", 1}});
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Polynomial> gens;
      for (unsigned w : {2u, 3u, 5u}) gens.push_back(random_homogeneous(R, w, rng, 2));
      auto gb = buchberger(gens, 10);
      for (std::size_t i = 0; i < gb.basis.size(); ++i) {
        auto& g = gb.basis[i];
        EXPECT_EQ(g.leading_term().coeff, 1u);
        EXPECT_LE(g.max_weight(), 10u);
        for (std::size_t j = 0; j < gb.basis.size(); ++j) {
          if (i == j) continue;
          for (auto& t : g.terms())
            EXPECT_FALSE(R->divides(gb.basis[j].leading_term().monomial, t.monomial));
        }
      }
    }
  }
}

TEST(Groebner, NormalFormAgainstLinearAlgebra) {
  std::mt19937 rng(5);
  for (unsigned p : {2u, 3u, 5u}) {
    auto R = RingContext::make(p, {{"a", 1}, {"b", 1}, {"c", 2}, {"d", 3}});
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Polynomial> gens = {random_homogeneous(R, 2, rng, 2), random_homogeneous(R, 3, rng, 2),
                                      random_homogeneous(R, 4, rng, 3)};
      const unsigned d = 8;
      auto gb = buchberger(gens, d);
      for (unsigned w = 1; w <= d; ++w) {
        for (int k = 0; k < 3; ++k) {
          auto f = random_homogeneous(R, w, rng);
          auto nf = normal_form(f, gb, true);
          auto& r = nf.remainder;
          EXPECT_TRUE(in_ideal_linear_algebra(f - r, gens));
          EXPECT_EQ(r.is_zero(), in_ideal_linear_algebra(f, gens));
          for (auto& t : r.terms()) EXPECT_FALSE(divisible_by_leading(t.monomial, gb));
          Polynomial sum = r;
          for (std::size_t i = 0; i < gb.basis.size(); ++i) sum += nf.quotients[i] * gb.basis[i];
          EXPECT_EQ(sum, f);
          EXPECT_EQ(normal_form(r, gb).remainder, r);
        }
      }
    }
  }
}

TEST(Groebner, IdealMembership) {
  std::mt19937 rng(17);
  auto R = RingContext::make(3, {{"c2", 2}, {"c3", 3}, {"c4", 4}, {"c5", 5}, {"c6", 6}, {"w", 1}});
  std::vector<Polynomial> gens = {parse("w^2-c2", R), parse("c2^2-c4", R), parse("c5+c2*c3", R)};
  auto gb = buchberger(gens, 14);
  for (int trial = 0; trial < 30; ++trial) {
    unsigned w = 5 + rng() % 10;
    Polynomial f(R);
    for (auto& g : gens) f += random_homogeneous(R, w - *g.weight(), rng) * g;
    EXPECT_TRUE(normal_form(f, gb).remainder.is_zero());
  }
}

TEST(Groebner, TruncationSoundness) {
  std::mt19937 rng(23);
  for (unsigned p : {2u, 3u}) {
    auto R = RingContext::make(p, {{"x", 1}, {"y", 1}, {"z", 2}, {"u", 2}});
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Polynomial> gens = {random_homogeneous(R, 2, rng, 2), random_homogeneous(R, 3, rng, 2)};
      auto full = buchberger(gens, 40);
      for (unsigned d = 3; d <= 8; ++d) {
        auto gb = buchberger(gens, d);
        for (unsigned w = 1; w <= d; ++w) {
          auto f = random_homogeneous(R, w, rng);
          EXPECT_EQ(normal_form(f, gb).remainder, normal_form(f, full).remainder);
        }
      }
    }
  }
}

TEST(Groebner, Deterministic) {
  auto R = RingContext::make(5, {{"c2", 2}, {"c3", 3}, {"c4", 4}, {"w", 1}});
  std::vector<Polynomial> gens = {parse("-w^2-c2", R), parse("2*w^3+c3-w*c2", R), parse("c4+c2^2+w*c3", R)};
  auto a = buchberger(gens, 12), b = buchberger(gens, 12);
  ASSERT_EQ(a.basis.size(), b.basis.size());
  for (std::size_t i = 0; i < a.basis.size(); ++i) EXPECT_EQ(render(a.basis[i]), render(b.basis[i]));
}
