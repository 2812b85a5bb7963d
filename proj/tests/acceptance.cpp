// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "halfcomm/crossed.hpp"
#include "halfcomm/fusion.hpp"
#include "halfcomm/groups.hpp"
#include "halfcomm/haar.hpp"
#include "halfcomm/words.hpp"
#include "oracles/brute.hpp"
#include "oracles/schur.hpp"

using namespace halfcomm;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

oracle::PlainWord plain(const Word& w) {
  oracle::PlainWord p;
  for (const auto& l : w) p.emplace_back(l.row, l.col);
  return p;
}

std::vector<Word> nonempty_words(const Presentation& p, std::size_t max_len) {
  std::vector<Word> out;
  for (auto& w : enumerate_words(p, max_len))
    if (!w.empty()) out.push_back(std::move(w));
  return out;
}

std::string idx(std::initializer_list<int> v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

// ---------------------------------------------------------------------------

Outcome ac1() {
  const auto words = nonempty_words(Presentation::ao_star(2), 5);
  if (words.size() != 1364) return fail("expected 1364 words, got " + std::to_string(words.size()));
  std::vector<oracle::PlainWord> rep(words.size());
  std::vector<Word> nf(words.size());
  for (std::size_t k = 0; k < words.size(); ++k) {
    rep[k] = *oracle::half_commutation_class(plain(words[k])).begin();
    nf[k] = hc_normal_form(words[k]);
  }
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = 0; b < words.size(); ++b) {
      ++pairs;
      if ((nf[a] == nf[b]) != (rep[a] == rep[b]))
        return fail("disagreement on " + format_word(words[a], Presentation::ao_star(2)) + " / " +
                    format_word(words[b], Presentation::ao_star(2)));
    }
  return {true, "1364 words, " + std::to_string(pairs) + " ordered pairs"};
}

Outcome ac2() {
  const Presentation ah = Presentation::ah_star(2);
  std::size_t zeros = 0;
  const auto words = nonempty_words(ah, 5);
  for (const auto& w : words) {
    const bool expected = oracle::class_has_forbidden_adjacency(oracle::half_commutation_class(plain(w)));
    if (ah_zero_test(w, ah) != expected) return fail("disagreement on " + format_word(w, ah));
    zeros += expected;
  }
  return {true, std::to_string(words.size()) + " words, " + std::to_string(zeros) + " vanish"};
}

Outcome ac3() {
  std::size_t count = 0;
  for (int n = 2; n <= 3; ++n) {
    std::vector<CrossedElement> g;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) g.push_back(CrossedElement::generator(n, i, j));
    for (const auto& a : g) {
      if (crossed_star(a) != a) return fail("generator not self-adjoint: " + a.to_string());
      for (const auto& b : g)
        for (const auto& c : g) {
          ++count;
          if (a * b * c != c * b * a) return fail("abc != cba for " + a.to_string() + b.to_string() + c.to_string());
        }
    }
  }
  return {true, std::to_string(count) + " triples"};
}

Outcome ac4() {
  const Presentation ao = Presentation::ao_star(2);
  std::set<Word> forms;
  for (const auto& w : enumerate_words(ao, 3)) forms.insert(hc_normal_form(w));
  std::vector<CrossedElement> images;
  for (const auto& w : forms) images.push_back(embed_pi(WordElement(ao, w)));
  std::size_t pairs = 0, bad = 0;
  std::string first;
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = a; b < images.size(); ++b) {
      ++pairs;
      if (norm_equal(images[a], images[b]) != (a == b)) {
        if (bad++ == 0) first = images[a].to_string() + " = " + images[b].to_string();
      }
    }
  CrossedElement sum(2);
  for (int k = 1; k <= 2; ++k) sum += CrossedElement::generator(2, 1, k) * CrossedElement::generator(2, 2, k);
  const bool orthogonal = haar_norm_squared(sum).is_zero();
  std::string detail = std::to_string(forms.size()) + " normal forms, " + std::to_string(pairs) + " pairs, " +
                       std::to_string(bad) + " mismatches" + (bad ? " (first: " + first + ")" : "") +
                       "; orthogonality norm " + (orthogonal ? "0" : "nonzero");
  return {bad == 0 && orthogonal, detail};
}

Outcome ac5() {
  std::size_t count = 0;
  for (int n = 2; n <= 3; ++n) {
    std::vector<CrossedElement> gens;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) gens.push_back(CrossedElement::generator(n, i, j));
    std::vector<CrossedElement> elems = gens;
    for (const auto& x : gens)
      for (const auto& y : gens) elems.push_back(x * y);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        elems.push_back(CrossedElement::even(FunElement::u(n, i, j)));
        elems.push_back(CrossedElement::even(FunElement::u(n, i, j) * FunElement::ubar(n, j, i)));
      }
    for (const auto& x : gens) {
      const CrossedTensor d = crossed_coproduct(x);
      const CrossedElement target = CrossedElement::one(n) * crossed_counit(x);
      if (!norm_equal(multiply_legs(d, n, 0), target) || !norm_equal(multiply_legs(d, n, 1), target))
        return fail("antipode identity on " + x.to_string());
    }
    for (const auto& x : elems) {
      ++count;
      const CrossedTensor d = crossed_coproduct(x);
      if (crossed_coproduct_on_leg(d, 0) != crossed_coproduct_on_leg(d, 1)) return fail("coassociativity on " + x.to_string());
      if (crossed_counit_on_leg(d, 0) != as_tensor(x) || crossed_counit_on_leg(d, 1) != as_tensor(x))
        return fail("counit on " + x.to_string());
      if (crossed_antipode(crossed_antipode(x)) != x) return fail("S^2 on " + x.to_string());
    }
  }
  return {true, std::to_string(count) + " elements of degree <= 2, n in {2,3}"};
}

bool norm_zero(const FunElement& f) { return haar_norm_squared(CrossedElement::even(f)).is_zero(); }

Outcome ac6() {
  std::size_t count = 0;
  for (int n = 2; n <= 3; ++n) {
    const auto w = [n](int i, int j, int k, int l) { return pun_generator(n, i, j, k, l); };
    const auto delta = [n](bool on) { return FunElement::constant(n, on ? 1 : 0); };
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) {
        FunElement rows = delta(i == k) * GaussianRational(-1), cols = rows;
        for (int j = 1; j <= n; ++j) {
          rows += w(i, k, j, j);
          cols += w(j, j, i, k);
        }
        count += 2;
        if (!norm_zero(rows) || !norm_zero(cols)) return fail("sum relation, n=" + std::to_string(n) + " i,k=" + idx({i, k}));
      }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            ++count;
            // w* - w' has norm 0 iff the star relation holds in R(U_n)
            if (!norm_zero(fun_star(w(i, j, k, l)) - w(j, i, l, k)))
              return fail("star relation " + idx({i, j, k, l}));
          }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int q = 1; q <= n; ++q)
          for (int r = 1; r <= n; ++r) {
            FunElement d = delta(i == q && j == r) * GaussianRational(-1);
            for (int k = 1; k <= n; ++k)
              for (int l = 1; l <= n; ++l) d += w(i, j, k, l) * fun_star(w(q, r, k, l));
            ++count;
            if (!norm_zero(d)) return fail("quadratic relation " + idx({i, j, q, r}));
          }
  }
  return {true, std::to_string(count) + " relations with Weingarten norm 0"};
}

Outcome ac7() {
  for (int n = 3; n <= 4; ++n)
    for (int p = 1; p <= 3; ++p) {
      const auto wg = weingarten_table(p, n);
      const auto perms = all_permutations(p);
      for (const auto& sigma : perms)
        for (const auto& rho : perms) {
          mpq_class sum = 0;
          for (const auto& tau : perms) {
            mpz_class power;
            mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n),
                          static_cast<unsigned long>(cycle_count(compose(sigma, inverse(tau)))));
            sum += mpq_class(power) * (*wg)(compose(tau, inverse(rho)));
          }
          if (sum != (sigma == rho ? 1 : 0)) return fail("inverse identity, n=" + std::to_string(n) + " p=" + std::to_string(p));
        }
    }
  std::mt19937_64 rng(20240611);
  double worst = 0.0;
  int made = 0;
  for (int n = 2; n <= 3; ++n) {
    std::uniform_int_distribution<int> index(1, n), degree(1, 2);
    for (int t = 0; t < 10; ++t, ++made) {
      const int deg = degree(rng);
      FunElement f = FunElement::constant(n, 1);
      for (int k = 0; k < deg; ++k) f = f * FunElement::u(n, index(rng), index(rng));
      for (int k = 0; k < deg; ++k) f = f * FunElement::ubar(n, index(rng), index(rng));
      const std::complex<double> exact = haar_integral(f).to_complex();
      const MCEstimate e = mc_integral(f, {GroupKind::Un, n}, 100000, 1000 + static_cast<std::uint64_t>(made));
      const double err = std::abs(e.mean - exact);
      if (!(err < 5.0 * e.std_error))
        return fail(f.to_string() + " on un:" + std::to_string(n) + ": |exact - mc| = " + std::to_string(err) +
                    ", stderr " + std::to_string(e.std_error));
      worst = std::max(worst, err / e.std_error);
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", worst);
  return {true, "inverse identity exact; 20 monomials at 1e5 samples, worst " + std::string(buf) + " stderr"};
}

Outcome ac8() {
  bool ok = true;
  std::string detail;
  const auto note = [&](bool good, const std::string& text) {
    ok = ok && good;
    detail += (detail.empty() ? "" : "; ") + text + (good ? "" : " [violated]");
  };
  note(!predicate({GroupKind::On, 3}, Predicate::NonReal, 1000, 1).holds, "on:3 not non-real");
  for (GroupModel m : {GroupModel{GroupKind::Un, 2}, GroupModel{GroupKind::Kn, 2}, GroupModel{GroupKind::U2n, 1}}) {
    const auto r = predicate(m, Predicate::DoublyNonReal, 1000, 1);
    bool good = r.holds && r.witness && contains(m, r.witness->g);
    if (good) {
      const auto& w = *r.witness;
      const auto v = w.g(w.indices[0] - 1, w.indices[1] - 1) * std::conj(w.g(w.indices[2] - 1, w.indices[3] - 1));
      good = std::abs(v.imag()) > kWitnessThreshold;
    }
    note(good, m.name() + " doubly non-real" + (r.proven && !r.holds ? " (all products provably real)" : ""));
  }
  int closed = 0;
  for (GroupKind kind : {GroupKind::Un, GroupKind::On, GroupKind::SUn, GroupKind::TorusN, GroupKind::Kn, GroupKind::U2n})
    for (int n = 1; n <= 3; ++n) closed += predicate({kind, n}, Predicate::SelfTranspose, 1000, 2).holds;
  note(closed == 18, std::to_string(closed) + "/18 models transpose-closed");
  return {ok, detail};
}

Outcome ac9() {
  const int n = 3;
  const GroupModel kn{GroupKind::Kn, n};
  std::vector<FunElement> monos;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (j != k) {
          monos.push_back(FunElement::u(n, i, j) * FunElement::u(n, i, k));
          monos.push_back(FunElement::u(n, k, i) * FunElement::u(n, j, i));
        }
  HaarSampler sampler(kn, 9);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const UnitaryMatrix g = sampler();
    for (const auto& f : monos) worst = std::max(worst, std::abs(evaluate(f, g)));
  }
  if (!(worst < 1e-12)) return fail("max |value| = " + std::to_string(worst));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1e", worst);
  return {true, std::to_string(monos.size()) + " monomials at 1000 samples, max |value| = " + buf};
}

Outcome ac10() {
  double worst_rel = 0.0;
  for (int n = 1; n <= 2; ++n) {
    const GroupModel model{GroupKind::U2n, n};
    const int dim = 2 * n;
    HaarSampler sampler(model, 21);
    for (int t = 0; t < 1000; ++t) {
      const UnitaryMatrix g = sampler();
      if ((g * g.adjoint() - UnitaryMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() >= 1e-8)
        return fail("sample not unitary");
      if ((g.topLeftCorner(n, n) - g.bottomRightCorner(n, n)).cwiseAbs().maxCoeff() >= 1e-8 ||
          (g.topRightCorner(n, n) + g.bottomLeftCorner(n, n)).cwiseAbs().maxCoeff() >= 1e-8)
        return fail("sample breaks the block pattern");
    }
    const GaussianRational i_unit = GaussianRational::imaginary_unit();
    std::vector<CrossedElement> u, ustar;
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) {
        const CrossedElement x = CrossedElement::generator(dim, r, c) + i_unit * CrossedElement::generator(dim, n + r, c);
        u.push_back(x);
        ustar.push_back(crossed_star(x));
      }
    const auto at = [n](const std::vector<Eigen::Matrix2cd>& m, int r, int c) {
      return m[static_cast<std::size_t>((r - 1) * n + (c - 1))];
    };
    for (int t = 0; t < 100; ++t) {
      const UnitaryMatrix g = sampler();
      std::vector<Eigen::Matrix2cd> mu, ms;
      for (std::size_t k = 0; k < u.size(); ++k) {
        mu.push_back(matrix_model_eval(u[k], g));
        ms.push_back(matrix_model_eval(ustar[k], g));
      }
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          const Eigen::Matrix2cd delta = Eigen::Matrix2cd::Identity() * (a == b ? 1.0 : 0.0);
          Eigen::Matrix2cd uus = Eigen::Matrix2cd::Zero(), usu = uus, ubar_t = uus, ut_bar = uus;
          for (int k = 1; k <= n; ++k) {
            uus += at(mu, a, k) * at(ms, b, k);    // u u^* = 1
            usu += at(ms, k, a) * at(mu, k, b);    // u^* u = 1
            ubar_t += at(ms, a, k) * at(mu, b, k); // ū u^t = 1
            ut_bar += at(mu, k, a) * at(ms, k, b); // u^t ū = 1
          }
          for (const auto* m : {&uus, &usu, &ubar_t, &ut_bar})
            worst_rel = std::max(worst_rel, (*m - delta).cwiseAbs().maxCoeff());
        }
      std::vector<Eigen::Matrix2cd> all = mu;
      all.insert(all.end(), ms.begin(), ms.end());
      for (const auto& a : all)
        for (const auto& b : all)
          for (const auto& c : all) worst_rel = std::max(worst_rel, (a * b * c - c * b * a).cwiseAbs().maxCoeff());
    }
    if (!(worst_rel < 1e-9)) return fail("n=" + std::to_string(n) + ": error " + std::to_string(worst_rel));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1e", worst_rel);
  return {true, "n in {1,2}, max relation error " + std::string(buf)};
}

Outcome ac11() {
  std::size_t pairs = 0;
  for (int n = 2; n <= 3; ++n) {
    const auto parts = oracle::partitions_up_to(4, n);
    for (const auto& lambda : parts)
      for (const auto& mu : parts) {
        Decomposition expected;
        for (const auto& [nu, c] : oracle::schur_product(lambda, mu, n)) expected[IrrLabel{nu}] = c;
        ++pairs;
        if (lr_tensor(lambda, mu, n) != expected) return fail("LR mismatch, n=" + std::to_string(n));
      }
  }
  std::mt19937_64 rng(11);
  const std::pair<const char*, int> instances[] = {{"un:2", 3}, {"un:3", 3}, {"sun:2", 6}, {"torus:2", 3}};
  for (const auto& [group, cap] : instances) {
    const auto data = make_fusion_data(group);
    const auto labels = data->labels_up_to(cap);
    std::vector<AStarLabel> graded;
    for (const auto& a : labels) graded.push_back({a, ((data->grade(a) % 2) + 2) % 2});
    std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
    const auto tensor3 = [&](const Decomposition& ab, const IrrLabel& c) {
      Decomposition out;
      for (const auto& [x, m] : ab)
        for (const auto& [y, k] : data->tensor(x, c)) out[y] += m * k;
      return out;
    };
    for (int t = 0; t < 50; ++t) {
      const IrrLabel &a = labels[pick(rng)], &b = labels[pick(rng)], &c = labels[pick(rng)];
      const Decomposition ab = data->tensor(a, b), bc = data->tensor(b, c);
      Decomposition left = tensor3(ab, c), right;
      for (const auto& [y, m] : bc)
        for (const auto& [z, k] : data->tensor(a, y)) right[z] += m * k;
      if (left != right) return fail(std::string(group) + ": associativity");
      long dims = 0;
      for (const auto& [x, m] : ab) dims += m * data->dim(x);
      if (dims != data->dim(a) * data->dim(b)) return fail(std::string(group) + ": dimension");
      const Decomposition abc = tensor3(ab, data->dual(c));
      if ((ab.count(c) ? ab.at(c) : 0) != (abc.count(data->unit()) ? abc.at(data->unit()) : 0))
        return fail(std::string(group) + ": Frobenius");

      const AStarLabel &x = graded[pick(rng)], &y = graded[pick(rng)], &z = graded[pick(rng)];
      const auto xy = astar_tensor(x, y, *data);
      if (astar_tensor(xy, {{z, 1}}, *data) != astar_tensor({{x, 1}}, astar_tensor(y, z, *data), *data))
        return fail(std::string(group) + ": A_* associativity");
      long adims = 0;
      for (const auto& [w, m] : xy) {
        adims += m * astar_dim(w, *data);
        if (w.parity != (x.parity ^ y.parity)) return fail(std::string(group) + ": parity grading");
        if (data->z_graded()) {
          const int g = x.parity == 0 ? data->grade(x.base) + data->grade(y.base) : data->grade(x.base) - data->grade(y.base);
          if (data->grade(w.base) != g) return fail(std::string(group) + ": integer grading");
        }
      }
      if (adims != astar_dim(x, *data) * astar_dim(y, *data)) return fail(std::string(group) + ": A_* dimension");
      const auto xz = astar_tensor(x, z, *data);
      const AStarLabel one{data->unit(), 0};
      const auto xzy = astar_tensor(xz, {{astar_dual(y, *data), 1}}, *data);
      if ((xz.count(y) ? xz.at(y) : 0) != (xzy.count(one) ? xzy.at(one) : 0))
        return fail(std::string(group) + ": A_* Frobenius");
      const auto dual_prod = astar_tensor(x, astar_dual(x, *data), *data);
      if (!dual_prod.count(one) || dual_prod.at(one) != 1) return fail(std::string(group) + ": duality");
    }
  }
  return {true, std::to_string(pairs) + " LR pairs; invariants on 50 triples x 4 instances"};
}

Outcome ac12() {
  const int cases[][3] = {{2, 1, 1}, {2, 2, 2}, {3, 1, 1}};
  std::string detail;
  for (const auto& c : cases) {
    const MomentCheck m = moment_crosscheck(c[0], c[1]);
    if (m.fusion_count != c[2] || m.haar_value != GaussianRational(c[2]))
      return fail("n=" + std::to_string(c[0]) + " k=" + std::to_string(c[1]) + ": (" + std::to_string(m.fusion_count) +
                  ", " + m.haar_value.to_string() + ")");
    detail += " (" + std::to_string(c[0]) + "," + std::to_string(c[1]) + ")->" + std::to_string(c[2]);
  }
  return {true, "fusion count = Haar value:" + detail};
}

Outcome ac13() {
  const UnitaryFusion u3(3);
  const AStarLabel x{IrrLabel{{1, 0, 0}}, 1}, y{IrrLabel{{1, 1, 0}}, 0};
  const auto xy = astar_tensor(x, y, u3), yx = astar_tensor(y, x, u3);
  if (xy == yx) return fail("orderings agree");
  std::string a, b;
  for (const auto& [l, m] : xy) a += (a.empty() ? "" : " + ") + format_astar(l, u3);
  for (const auto& [l, m] : yx) b += (b.empty() ? "" : " + ") + format_astar(l, u3);
  return {true, a + "  vs  " + b};
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds; // 0: no stated limit
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "rewriting vs closure oracle", 60, ac1},
      {2, "zero rule vs adjacency oracle", 60, ac2},
      {3, "crossed generator identities", 0, ac3},
      {4, "faithful Haar norm on normal forms", 120, ac4},
      {5, "Hopf axioms", 0, ac5},
      {6, "projective unitary relations", 0, ac6},
      {7, "Weingarten engine", 300, ac7},
      {8, "group predicates", 0, ac8},
      {9, "hyperoctahedral zero monomials", 0, ac9},
      {10, "U_{2,n} model", 0, ac10},
      {11, "fusion engine", 120, ac11},
      {12, "moment cross-validation", 0, ac12},
      {13, "noncommutative fusion witness", 0, ac13},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.budget_seconds > 0 && secs >= c.budget_seconds) o = fail("over the time budget: " + o.detail);
    failures += !o.ok;
    std::printf("%s AC%d %s [%.2fs]: %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
