#include <doctest.h>

#include <random>

#include "halfcomm/errors.hpp"
#include "halfcomm/groups.hpp"

using namespace halfcomm;

namespace {

const GroupKind kAll[] = {GroupKind::Un, GroupKind::On, GroupKind::SUn, GroupKind::TorusN, GroupKind::Kn, GroupKind::U2n};

} // namespace

TEST_CASE("samplers land in their own models and are deterministic") {
  for (GroupKind kind : kAll)
    for (int n = 1; n <= 4; ++n) {
      const GroupModel model{kind, n};
      HaarSampler sampler(model, 11);
      for (int t = 0; t < 2500; ++t) REQUIRE(contains(model, sampler()));
      CHECK(sample_haar(model, 5).isApprox(sample_haar(model, 5), 0.0));
    }
}

TEST_CASE("model-specific shapes") {
  const UnitaryMatrix t = sample_haar({GroupKind::TorusN, 2}, 1);
  CHECK(std::abs(t(0, 1)) == 0.0);
  CHECK(std::abs(std::abs(t(0, 0)) - 1.0) < 1e-12);
  const UnitaryMatrix k = sample_haar({GroupKind::Kn, 3}, 2);
  for (int r = 0; r < 3; ++r) CHECK((k.row(r).cwiseAbs().array() > 0.5).count() == 1);
  const UnitaryMatrix b = sample_haar({GroupKind::U2n, 2}, 3);
  CHECK(b.rows() == 4);
  CHECK((b.topLeftCorner(2, 2) - b.bottomRightCorner(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((b.topRightCorner(2, 2) + b.bottomLeftCorner(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(contains({GroupKind::U2n, 2}, b.transpose()));
  const UnitaryMatrix s = sample_haar({GroupKind::SUn, 3}, 4);
  CHECK(std::abs(s.determinant() - 1.0) < 1e-10);
}

TEST_CASE("contains") {
  for (GroupKind kind : kAll) {
    const GroupModel m{kind, 2};
    CHECK(contains(m, UnitaryMatrix::Identity(m.ambient_dim(), m.ambient_dim())));
  }
  UnitaryMatrix d = UnitaryMatrix::Identity(2, 2);
  d(0, 0) = std::complex<double>(0, 1);
  CHECK(contains({GroupKind::Un, 2}, d));
  CHECK_FALSE(contains({GroupKind::On, 2}, d));
  CHECK_FALSE(contains({GroupKind::Un, 2}, 2.0 * d));
  CHECK_THROWS_AS(contains({GroupKind::Un, 3}, d), UsageError);
}

TEST_CASE("predicates") {
  const auto nr = predicate({GroupKind::On, 3}, Predicate::NonReal, 100, 1);
  CHECK_FALSE(nr.holds);
  for (GroupModel m : {GroupModel{GroupKind::Un, 2}, GroupModel{GroupKind::Kn, 2}, GroupModel{GroupKind::U2n, 2}}) {
    INFO(m.name());
    const auto r = predicate(m, Predicate::DoublyNonReal, 100, 1);
    REQUIRE(r.holds);
    REQUIRE(r.witness);
    const auto& w = *r.witness;
    const auto v = w.g(w.indices[0] - 1, w.indices[1] - 1) * std::conj(w.g(w.indices[2] - 1, w.indices[3] - 1));
    CHECK(std::abs(v.imag()) > kWitnessThreshold);
    CHECK(contains(m, w.g));
  }
  for (GroupKind kind : kAll) CHECK(predicate({kind, 3}, Predicate::SelfTranspose, 1000, 9).holds);
  const auto u21 = predicate({GroupKind::U2n, 1}, Predicate::DoublyNonReal, 50, 3);
  CHECK_FALSE(u21.holds);
  CHECK(u21.proven);
  HaarSampler u21_sampler({GroupKind::U2n, 1}, 4);
  for (int t = 0; t < 200; ++t) {
    const UnitaryMatrix g = u21_sampler();
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) CHECK(std::abs((g(a / 2, a % 2) * std::conj(g(b / 2, b % 2))).imag()) < 1e-12);
  }
  CHECK(predicate({GroupKind::U2n, 1}, Predicate::NonReal, 50, 3).holds);
  // the only product on T^1 is |g|^2
  CHECK(predicate({GroupKind::TorusN, 1}, Predicate::NonReal, 50, 3).holds);
  CHECK_FALSE(predicate({GroupKind::TorusN, 1}, Predicate::DoublyNonReal, 50, 3).holds);
}

TEST_CASE("GroupModel parsing") {
  CHECK(GroupModel::parse("u2n:2").ambient_dim() == 4);
  CHECK(GroupModel::parse("kn:3").name() == "kn:3");
  CHECK_THROWS_AS(GroupModel::parse("sp:2"), UsageError);
  CHECK_THROWS_AS(GroupModel::parse("un:x"), UsageError);
}

TEST_CASE("matrix model is a *-homomorphism at sample points") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> idx(1, 2), coin(0, 1);
  const auto rand_elem = [&] {
    FunElement f = FunElement::constant(2, GaussianRational(coin(rng) + 1, coin(rng)));
    for (int d = 0; d < 2; ++d)
      f = f * (coin(rng) ? FunElement::u(2, idx(rng), idx(rng)) : FunElement::ubar(2, idx(rng), idx(rng)));
    return coin(rng) ? CrossedElement::even(f) : CrossedElement::odd(f);
  };
  HaarSampler sampler({GroupKind::Un, 2}, 8);
  CHECK(matrix_model_eval(CrossedElement::one(2), sampler()).isApprox(Eigen::Matrix2cd::Identity()));
  for (int t = 0; t < 100; ++t) {
    const UnitaryMatrix g = sampler();
    const CrossedElement x = rand_elem() + rand_elem(), y = rand_elem();
    const auto mx = matrix_model_eval(x, g), my = matrix_model_eval(y, g);
    CHECK((matrix_model_eval(x * y, g) - mx * my).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((matrix_model_eval(x + y, g) - mx - my).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((matrix_model_eval(crossed_star(x), g) - mx.adjoint()).cwiseAbs().maxCoeff() < 1e-9);
  }
  const UnitaryMatrix o = sample_haar({GroupKind::On, 2}, 1);
  const auto m = matrix_model_eval(CrossedElement::generator(2, 1, 2), o);
  CHECK(m(0, 1) == m(1, 0));
  CHECK(m(0, 0) == std::complex<double>(0));
}
