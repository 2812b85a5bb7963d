#include <doctest.h>

#include <random>

#include "halfcomm/errors.hpp"
#include "halfcomm/haar.hpp"
#include "oracles/brute.hpp"

using namespace halfcomm;

namespace {

FunElement abs_u11_power(int n, int k) {
  FunElement f = FunElement::constant(n, 1);
  for (int t = 0; t < k; ++t) f = f * FunElement::u(n, 1, 1) * FunElement::ubar(n, 1, 1);
  return f;
}

CrossedElement random_crossed(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(1, n), coin(0, 1), small(-2, 2);
  CrossedElement x(n);
  for (int t = 0; t < 3; ++t) {
    FunElement f = FunElement::constant(n, GaussianRational(small(rng), small(rng)));
    for (int d = coin(rng); d < 2; ++d)
      f = f * (coin(rng) ? FunElement::u(n, idx(rng), idx(rng)) : FunElement::ubar(n, idx(rng), idx(rng)));
    x += coin(rng) ? CrossedElement::even(f) : CrossedElement::odd(f);
  }
  return x;
}

} // namespace

TEST_CASE("Weingarten values") {
  for (int n = 1; n <= 4; ++n) CHECK(weingarten_table(1, n)->values[0] == mpq_class(1, n));
  for (int n = 2; n <= 4; ++n) {
    const auto wg = weingarten_table(2, n);
    CHECK(wg->full_rank);
    CHECK(wg->values[0] == mpq_class(1, n * n - 1));
    CHECK(wg->values[1] == mpq_class(-1, n * (n * n - 1)));
  }
  const auto w3 = weingarten_table(3, 3);
  // identity, transposition, 3-cycle for n = 3: (n²-2)/(n(n²-1)(n²-4)), -1/((n²-1)(n²-4)), 2/(n(n²-1)(n²-4))
  CHECK((*w3)({0, 1, 2}) == mpq_class(7, 3 * 8 * 5));
  CHECK((*w3)({1, 0, 2}) == mpq_class(-1, 8 * 5));
  CHECK((*w3)({1, 2, 0}) == mpq_class(1, 60));
  CHECK_FALSE(weingarten_table(3, 2)->full_rank);
  CHECK_THROWS_AS(weingarten_table(6, 2, 5), ResourceError);
  CHECK_THROWS_AS(weingarten_table(1, 0), UsageError);
}

TEST_CASE("Weingarten class function and pseudo-inverse identities") {
  for (int p = 1; p <= 4; ++p)
    for (int n = 1; n <= 3; ++n) {
      const auto wg = weingarten_table(p, n);
      const auto perms = all_permutations(p);
      for (const auto& a : perms)
        for (const auto& b : perms)
          CHECK((*wg)(a) == (*wg)(compose(compose(b, a), inverse(b))));
      const RationalMatrix g = gram_matrix(p, n);
      RationalMatrix w(perms.size(), perms.size());
      for (std::size_t r = 0; r < perms.size(); ++r)
        for (std::size_t c = 0; c < perms.size(); ++c) w(r, c) = (*wg)(compose(perms[r], inverse(perms[c])));
      CHECK(g * w * g == g);
      CHECK(w * g * w == w);
    }
}

TEST_CASE("closed-form integrals") {
  CHECK(haar_integral(FunElement::u(2, 1, 1) * FunElement::ubar(2, 1, 1)) == GaussianRational::fraction(1, 2));
  for (int n = 1; n <= 3; ++n) {
    FunElement trace(n), trace_bar(n);
    for (int i = 1; i <= n; ++i) {
      trace += FunElement::u(n, i, i);
      trace_bar += FunElement::ubar(n, i, i);
    }
    CHECK(haar_integral(trace * trace_bar) == 1);
    CHECK(haar_integral(trace).is_zero());
    CHECK(haar_integral(FunElement::u(n, 1, 1) * FunElement::u(n, 1, 1)).is_zero());
    const CrossedElement v11 = CrossedElement::generator(n, 1, 1);
    CHECK(haar_state(v11 * v11) == GaussianRational::fraction(1, n));
    CHECK(haar_state(v11).is_zero());
  }
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 4; ++k) {
      const GaussianRational exact = haar_integral(abs_u11_power(n, k));
      CHECK(exact.re().get_d() == doctest::Approx(oracle::moment_abs_u11(n, k)).epsilon(1e-14));
      CHECK(exact.is_real());
    }
}

TEST_CASE("norm_equal") {
  const int n = 3;
  const auto g = [&](int i, int j) { return CrossedElement::generator(n, i, j); };
  CHECK(norm_equal(g(1, 1) * g(1, 2) * g(1, 3), g(1, 3) * g(1, 2) * g(1, 1)));
  CHECK(norm_equal(g(2, 1) * g(3, 3) * g(1, 2), g(1, 2) * g(3, 3) * g(2, 1)));
  CHECK_FALSE(norm_equal(g(1, 1) * g(1, 2), g(1, 2) * g(1, 1)));
  CHECK_FALSE(norm_equal(g(1, 1), g(1, 2)));
  // rows of u are orthonormal modulo the unitary relations
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      FunElement row(n);
      for (int k = 1; k <= n; ++k) row += FunElement::u(n, i, k) * FunElement::ubar(n, j, k);
      CHECK(norm_equal(CrossedElement::even(row), CrossedElement::even(FunElement::constant(n, i == j ? 1 : 0))));
    }
}

TEST_CASE("positivity and invariance of the Haar state") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 25; ++t) {
    const int n = 2;
    const CrossedElement x = random_crossed(n, rng);
    const GaussianRational h2 = haar_norm_squared(x);
    CHECK(h2.is_real());
    CHECK(sgn(h2.re()) >= 0);
    CHECK(haar_state(crossed_star(x)) == haar_state(x).conj());
    const CrossedTensor d = crossed_coproduct(x);
    const CrossedElement expected = CrossedElement::one(n) * haar_state(x);
    // equal in R(U_n), not as polynomials
    CHECK(norm_equal(haar_on_leg(d, 0, n), expected));
    CHECK(norm_equal(haar_on_leg(d, 1, n), expected));
  }
}

TEST_CASE("Monte Carlo agrees with the exact integrals") {
  const GroupModel un2{GroupKind::Un, 2};
  const FunElement f = abs_u11_power(2, 2);
  const MCEstimate est = mc_integral(f, un2, 40000, 5);
  CHECK(std::abs(est.mean.real() - 1.0 / 3.0) < 5 * est.std_error);
  CHECK(std::abs(est.mean.imag()) < 5 * est.std_error + 1e-12);
  const MCEstimate again = mc_integral(f, un2, 40000, 5);
  CHECK(again.mean == est.mean);
  CHECK(again.std_error == est.std_error);
  CHECK_THROWS_AS(mc_integral(f, GroupModel{GroupKind::Un, 3}, 100, 1), UsageError);
  CHECK_THROWS_AS(mc_integral(f, un2, 1, 1), UsageError);

  const auto g = [](int i, int j) { return CrossedElement::generator(2, i, j); };
  const auto same = mc_norm_equal(g(1, 1) * g(1, 2) * g(2, 1), g(2, 1) * g(1, 2) * g(1, 1), un2, 5000, 3);
  CHECK(same.equal);
  const auto differ = mc_norm_equal(g(1, 1) * g(1, 2), g(1, 2) * g(1, 1), un2, 5000, 3);
  CHECK_FALSE(differ.equal);
  const auto on_o2 = mc_norm_equal(g(1, 1) * g(1, 2), g(1, 2) * g(1, 1), GroupModel{GroupKind::On, 2}, 5000, 3);
  CHECK(on_o2.equal);
}

TEST_CASE("degree cap") {
  CHECK_THROWS_AS(haar_integral(abs_u11_power(2, 6)), ResourceError);
  CHECK_THROWS_AS(haar_integral(abs_u11_power(2, 5), 4), ResourceError);
  CHECK(haar_integral(abs_u11_power(2, 5)) == GaussianRational::fraction(1, 6));
  CHECK(haar_integral(FunElement::u(2, 1, 1) * FunElement::u(2, 1, 1) * FunElement::u(2, 1, 1) * FunElement::u(2, 2, 2) *
                      FunElement::u(2, 1, 2) * FunElement::u(2, 1, 2) * FunElement::ubar(2, 1, 1))
            .is_zero());
}
