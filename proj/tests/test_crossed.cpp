#include <doctest.h>

#include <random>

#include "halfcomm/crossed.hpp"
#include "halfcomm/errors.hpp"

using namespace halfcomm;

namespace {

FunElement u(int n, int i, int j) { return FunElement::u(n, i, j); }
FunElement ub(int n, int i, int j) { return FunElement::ubar(n, i, j); }
CrossedElement even(const FunElement& f) { return CrossedElement::even(f); }
CrossedElement odd(const FunElement& f) { return CrossedElement::odd(f); }

// Random element with monomial support of degree <= 3.
CrossedElement random_element(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(1, n), deg(0, 3), coin(0, 1), coef(-3, 3);
  CrossedElement x(n);
  for (int t = 0; t < 3; ++t) {
    FunElement f = FunElement::constant(n, GaussianRational(coef(rng), coef(rng)));
    for (int d = deg(rng); d > 0; --d) f = f * (coin(rng) ? u(n, idx(rng), idx(rng)) : ub(n, idx(rng), idx(rng)));
    x += coin(rng) ? even(f) : odd(f);
  }
  return x;
}

} // namespace

TEST_CASE("bar automorphism") {
  CHECK(bar_automorphism(u(2, 1, 2)) == ub(2, 1, 2));
  CHECK(bar_automorphism(u(2, 1, 1) * ub(2, 2, 2)) == ub(2, 1, 1) * u(2, 2, 2));
  const FunElement f = GaussianRational::imaginary_unit() * u(2, 1, 1) * u(2, 1, 1);
  CHECK(bar_automorphism(bar_automorphism(f)) == f);
}

TEST_CASE("crossed_mul examples") {
  CHECK(odd(u(2, 1, 1)) * odd(u(2, 2, 2)) == even(u(2, 1, 1) * ub(2, 2, 2)));
  std::mt19937_64 rng(1);
  const CrossedElement x = random_element(2, rng);
  CHECK(CrossedElement::one(2) * x == x);
  CHECK(x * CrossedElement::one(2) == x);
  CHECK(even(u(2, 1, 1)) * odd(u(2, 1, 2)) == odd(u(2, 1, 1) * u(2, 1, 2)));
  CHECK_THROWS_AS(CrossedElement::one(2) * CrossedElement::one(3), UsageError);
}

TEST_CASE("crossed_mul is associative and distributive") {
  std::mt19937_64 rng(2);
  for (int n : {1, 2, 3})
    for (int t = 0; t < 30; ++t) {
      const CrossedElement a = random_element(n, rng), b = random_element(n, rng), c = random_element(n, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("crossed_star") {
  CHECK(crossed_star(odd(u(2, 1, 2))) == odd(u(2, 1, 2)));
  const GaussianRational i = GaussianRational::imaginary_unit();
  CHECK(crossed_star(even(i * u(2, 1, 1))) == even(-i * ub(2, 1, 1)));
  const CrossedElement x = odd(u(2, 1, 1)), y = odd(u(2, 2, 1));
  CHECK(crossed_star(x * y) == crossed_star(y) * crossed_star(x));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const CrossedElement a = random_element(3, rng), b = random_element(3, rng);
    CHECK(crossed_star(crossed_star(a)) == a);
    CHECK(crossed_star(a * b) == crossed_star(b) * crossed_star(a));
  }
}

TEST_CASE("crossed_antipode") {
  CHECK(crossed_antipode(even(u(2, 1, 2))) == even(ub(2, 2, 1)));
  CHECK(crossed_antipode(odd(u(2, 1, 2))) == odd(u(2, 2, 1)));
  const CrossedElement x(u(2, 1, 1) * ub(2, 1, 2), u(2, 2, 2));
  CHECK(crossed_antipode(crossed_antipode(x)) == x);
}

TEST_CASE("crossed_coproduct") {
  CrossedTensor expected;
  expected.add({CrossedBasis{FunMonomial::symbol(2, {1, 1, false}), 1}, CrossedBasis{FunMonomial::symbol(2, {1, 1, false}), 1}}, 1);
  expected.add({CrossedBasis{FunMonomial::symbol(2, {1, 2, false}), 1}, CrossedBasis{FunMonomial::symbol(2, {2, 1, false}), 1}}, 1);
  CHECK(crossed_coproduct(odd(u(2, 1, 1))) == expected);

  CrossedTensor unit;
  unit.add({CrossedBasis{FunMonomial(2), 0}, CrossedBasis{FunMonomial(2), 0}}, 1);
  CHECK(crossed_coproduct(CrossedElement::one(2)) == unit);

  const CrossedTensor d = crossed_coproduct(odd(u(2, 1, 2)));
  CHECK(crossed_coproduct_on_leg(d, 0) == crossed_coproduct_on_leg(d, 1));
  CHECK_THROWS_AS(crossed_coproduct(even(u(2, 1, 1) * u(2, 1, 1) * u(2, 1, 1)), 2), ResourceError);
}

TEST_CASE("generators satisfy the half-commutation identities exactly") {
  for (int n : {2, 3}) {
    std::vector<CrossedElement> g;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) g.push_back(CrossedElement::generator(n, i, j));
    for (const auto& a : g) {
      CHECK(crossed_star(a) == a);
      for (const auto& b : g)
        for (const auto& c : g) REQUIRE(a * b * c == c * b * a);
    }
  }
}

TEST_CASE("embed_pi") {
  const Presentation ao2 = Presentation::ao_star(2);
  const auto word = [&](std::initializer_list<std::pair<int, int>> ls) {
    Word w;
    for (auto [r, c] : ls) w.push_back(Letter{r, c, false});
    return WordElement(ao2, w);
  };
  CHECK(embed_pi(word({{1, 1}, {2, 2}})) == even(u(2, 1, 1) * ub(2, 2, 2)));
  CHECK(embed_pi(word({})) == CrossedElement::one(2));
  CHECK(embed_pi(word({{1, 1}, {2, 2}, {1, 2}})) == embed_pi(word({{1, 2}, {2, 2}, {1, 1}})));
  for (const Word& a : enumerate_words(ao2, 2))
    for (const Word& b : enumerate_words(ao2, 2)) {
      const WordElement x(ao2, a), y(ao2, b);
      CHECK(embed_pi(x * y) == embed_pi(x) * embed_pi(y));
      CHECK(embed_pi(star_element(x)) == crossed_star(embed_pi(x)));
    }
  // A_u^**(1): u goes to x_11 + i x_21 in A_o^*(2), then through π.
  const Presentation au1 = Presentation::au_star_star(1);
  const GaussianRational i = GaussianRational::imaginary_unit();
  CHECK(embed_pi(WordElement::generator(au1, 1, 1)) == odd(u(2, 1, 1) + i * u(2, 2, 1)));
}

TEST_CASE("coinvariant_test") {
  CHECK(coinvariant_test(even(u(2, 1, 1) * ub(2, 2, 2))));
  CHECK_FALSE(coinvariant_test(odd(u(2, 1, 1))));
  const Presentation ao2 = Presentation::ao_star(2);
  for (const Word& w : enumerate_words(ao2, 3)) {
    const CrossedElement x = embed_pi(WordElement(ao2, w));
    CHECK(coinvariant_by_coproduct(x) == coinvariant_by_parity(x));
    CHECK(coinvariant_test(x) == (w.size() % 2 == 0));
  }
}

TEST_CASE("pun_generator") {
  CHECK(pun_generator(2, 1, 1, 1, 1) == u(2, 1, 1) * ub(2, 1, 1));
  CHECK(fun_star(pun_generator(2, 1, 2, 1, 2)) == pun_generator(2, 2, 1, 2, 1));
  CHECK_THROWS_AS(pun_generator(2, 1, 3, 1, 1), UsageError);
}

TEST_CASE("multiply_legs") {
  const CrossedElement g = CrossedElement::generator(2, 1, 2);
  const CrossedTensor d = crossed_coproduct(g);
  // m Δ(u_12 s) = Σ_k u_1k s u_k2 s = Σ_k u_1k ū_k2
  CHECK(multiply_legs(d, 2) == even(u(2, 1, 1) * ub(2, 1, 2) + u(2, 1, 2) * ub(2, 2, 2)));
  CHECK(multiply_legs(CrossedTensor{}, 2).is_zero());
}

TEST_CASE("printing") {
  CHECK(CrossedElement::s(2).to_string() == "s");
  CHECK(odd(u(2, 1, 1) * ub(2, 2, 2)).to_string() == "u[1,1] u*[2,2] s");
  CHECK(CrossedElement(2).to_string() == "0");
}
