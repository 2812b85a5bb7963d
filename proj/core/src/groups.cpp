#include "halfcomm/groups.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "halfcomm/errors.hpp"

namespace halfcomm {

namespace {

using cd = std::complex<double>;

Eigen::MatrixXcd ginibre(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Eigen::MatrixXcd z(n, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) z(r, c) = cd(normal(rng), normal(rng));
  return z;
}

// QR of a Ginibre matrix with the phases of diag(R) pushed into Q (Mezzadri's recipe).
Eigen::MatrixXcd haar_unitary(int n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre(n, rng));
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (int k = 0; k < n; ++k) {
    const cd d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= (mag > 0 ? d / mag : cd(1.0));
  }
  return q;
}

Eigen::MatrixXcd haar_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd z(n, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) z(r, c) = normal(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd& r = qr.matrixQR();
  for (int k = 0; k < n; ++k)
    if (r(k, k) < 0) q.col(k) *= -1.0;
  return q.cast<cd>();
}

cd random_phase(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, angle(rng));
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

} // namespace

GroupModel GroupModel::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("group model must look like un:N, got '" + text + "'");
  const std::string head = text.substr(0, colon);
  const std::string tail = text.substr(colon + 1);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
  if (ec != std::errc{} || ptr != tail.data() + tail.size() || n < 1)
    throw UsageError("invalid group dimension in '" + text + "'");
  GroupModel m;
  m.n = n;
  if (head == "un") m.kind = GroupKind::Un;
  else if (head == "on") m.kind = GroupKind::On;
  else if (head == "sun") m.kind = GroupKind::SUn;
  else if (head == "torus") m.kind = GroupKind::TorusN;
  else if (head == "kn") m.kind = GroupKind::Kn;
  else if (head == "u2n") m.kind = GroupKind::U2n;
  else throw UsageError("unknown group model '" + head + "'");
  return m;
}

std::string GroupModel::name() const {
  const char* head = "un";
  switch (kind) {
  case GroupKind::Un: head = "un"; break;
  case GroupKind::On: head = "on"; break;
  case GroupKind::SUn: head = "sun"; break;
  case GroupKind::TorusN: head = "torus"; break;
  case GroupKind::Kn: head = "kn"; break;
  case GroupKind::U2n: head = "u2n"; break;
  }
  return std::string(head) + ":" + std::to_string(n);
}

UnitaryMatrix HaarSampler::operator()() {
  const int n = model_.n;
  switch (model_.kind) {
  case GroupKind::Un: return haar_unitary(n, rng_);
  case GroupKind::On: return haar_orthogonal(n, rng_);
  case GroupKind::SUn: {
    Eigen::MatrixXcd u = haar_unitary(n, rng_);
    const double theta = std::arg(u.determinant());
    return u * std::polar(1.0, -theta / n);
  }
  case GroupKind::TorusN: {
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) g(k, k) = random_phase(rng_);
    return g;
  }
  case GroupKind::Kn: {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng_);
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) g(k, perm[static_cast<std::size_t>(k)]) = random_phase(rng_);
    return g;
  }
  case GroupKind::U2n: {
    // U_{2,n} ≅ U_n × U_n: [[A,B],[-B,A]] acts as P on {(x, ix)} and as Q on {(x, -ix)},
    // where P = A + iB and Q = A - iB.
    const Eigen::MatrixXcd p = haar_unitary(n, rng_);
    const Eigen::MatrixXcd q = haar_unitary(n, rng_);
    const Eigen::MatrixXcd a = (p + q) / 2.0;
    const Eigen::MatrixXcd b = (p - q) / cd(0.0, 2.0);
    Eigen::MatrixXcd g(2 * n, 2 * n);
    g << a, b, -b, a;
    return g;
  }
  }
  throw UsageError("unsupported group model");
}

UnitaryMatrix sample_haar(const GroupModel& model, std::uint64_t seed) { return HaarSampler(model, seed)(); }

bool contains(const GroupModel& model, const UnitaryMatrix& g) {
  const int dim = model.ambient_dim();
  if (g.rows() != dim || g.cols() != dim)
    throw UsageError("matrix of size " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()) +
                     " tested against " + model.name());
  const double tol = model.tolerance;
  if (max_abs(g * g.adjoint() - Eigen::MatrixXcd::Identity(dim, dim)) >= tol) return false;
  const int n = model.n;
  switch (model.kind) {
  case GroupKind::Un: return true;
  case GroupKind::On: return g.imag().cwiseAbs().maxCoeff() < tol;
  case GroupKind::SUn: return std::abs(g.determinant() - cd(1.0)) < tol;
  case GroupKind::TorusN: {
    Eigen::MatrixXcd off = g;
    off.diagonal().setZero();
    return max_abs(off) < tol;
  }
  case GroupKind::Kn: {
    for (int k = 0; k < n; ++k) {
      if ((g.row(k).cwiseAbs().array() >= tol).count() != 1) return false;
      if ((g.col(k).cwiseAbs().array() >= tol).count() != 1) return false;
    }
    return true;
  }
  case GroupKind::U2n: {
    const auto a = g.topLeftCorner(n, n);
    const auto b = g.topRightCorner(n, n);
    return max_abs(a - g.bottomRightCorner(n, n)) < tol && max_abs(b + g.bottomLeftCorner(n, n)) < tol;
  }
  }
  return false;
}

PredicateResult predicate(const GroupModel& model, Predicate which, int trials, std::uint64_t seed) {
  if (trials < 1) throw UsageError("predicate needs at least one trial");
  PredicateResult result;
  if (which != Predicate::SelfTranspose && model.kind == GroupKind::On) {
    // Real entries: no g_ij nor g_ij·conj(g_kl) can leave R.
    result.holds = false;
    result.proven = true;
    return result;
  }
  if (which == Predicate::DoublyNonReal && model.kind == GroupKind::U2n && model.n == 1) {
    // [[a,b],[-b,a]] unitary forces a·conj(b) real, so every g_ij·conj(g_kl) is real.
    result.holds = false;
    result.proven = true;
    return result;
  }
  HaarSampler sampler(model, seed);
  const int dim = model.ambient_dim();
  for (int t = 0; t < trials; ++t) {
    const UnitaryMatrix g = sampler();
    ++result.trials_run;
    switch (which) {
    case Predicate::SelfTranspose:
      if (!contains(model, g.transpose())) {
        result.holds = false;
        result.proven = true;
        result.witness = PredicateWitness{g, {}, {}};
        return result;
      }
      break;
    case Predicate::NonReal:
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          if (std::abs(g(i, j).imag()) > kWitnessThreshold) {
            result.holds = result.proven = true;
            result.witness = PredicateWitness{g, {i + 1, j + 1, 0, 0}, g(i, j)};
            return result;
          }
      break;
    case Predicate::DoublyNonReal:
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          for (int k = 0; k < dim; ++k)
            for (int l = 0; l < dim; ++l) {
              const cd v = g(i, j) * std::conj(g(k, l));
              if (std::abs(v.imag()) > kWitnessThreshold) {
                result.holds = result.proven = true;
                result.witness = PredicateWitness{g, {i + 1, j + 1, k + 1, l + 1}, v};
                return result;
              }
            }
      break;
    }
  }
  // Transpose closure holds structurally for every shipped model; sampling only checked it.
  result.holds = which == Predicate::SelfTranspose;
  result.proven = which == Predicate::SelfTranspose;
  return result;
}

std::complex<double> evaluate(const FunElement& f, const UnitaryMatrix& g) {
  const int n = f.dimension();
  if (g.rows() != n || g.cols() != n)
    throw UsageError("evaluating symbols of dimension " + std::to_string(n) + " at a " +
                     std::to_string(g.rows()) + "x" + std::to_string(g.cols()) + " matrix");
  cd total = 0;
  for (const auto& [m, c] : f.terms()) {
    cd v = c.to_complex();
    for (const auto& s : m.expand()) {
      const cd entry = g(s.row - 1, s.col - 1);
      v *= s.conj ? std::conj(entry) : entry;
    }
    total += v;
  }
  return total;
}

Eigen::Matrix2cd matrix_model_eval(const CrossedElement& x, const UnitaryMatrix& g) {
  const UnitaryMatrix gbar = g.conjugate();
  Eigen::Matrix2cd out;
  out(0, 0) = evaluate(x.f0(), g);
  out(1, 1) = evaluate(x.f0(), gbar);
  out(0, 1) = evaluate(x.f1(), g);
  out(1, 0) = evaluate(x.f1(), gbar);
  return out;
}

} // namespace halfcomm
