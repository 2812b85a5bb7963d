#include "halfcomm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "halfcomm/crossed.hpp"
#include "halfcomm/errors.hpp"
#include "halfcomm/fusion.hpp"
#include "halfcomm/fusion_table.hpp"
#include "halfcomm/groups.hpp"
#include "halfcomm/haar.hpp"
#include "halfcomm/permutation.hpp"
#include "halfcomm/words.hpp"

namespace halfcomm {

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome pass(std::string detail) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

class Battery {
public:
  explicit Battery(std::string suite) { report_.suite = std::move(suite); }

  void check(const std::string& id, const std::string& anchor, const std::function<Outcome()>& body) {
    CheckResult r{report_.suite, id, anchor, false, {}};
    try {
      const Outcome o = body();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const ResourceError& e) {
      r.detail = std::string("resource cap exceeded: ") + e.what();
    } catch (const std::logic_error& e) {
      r.detail = std::string("internal inconsistency: ") + e.what();
    }
    report_.checks.push_back(std::move(r));
  }

  VerifyReport finish() {
    std::stable_sort(report_.checks.begin(), report_.checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return std::move(report_);
  }

private:
  VerifyReport report_;
};

std::string idx(std::initializer_list<int> v) {
  std::string out = "[";
  bool first = true;
  for (int x : v) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  return out + "]";
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

void require_n(const VerifyParams& p, int lo = 1) {
  if (p.n < lo) throw UsageError("this suite needs --n >= " + std::to_string(lo));
}

std::vector<CrossedElement> generators(int n) {
  std::vector<CrossedElement> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.push_back(CrossedElement::generator(n, i, j));
  return out;
}

CrossedElement pi_word(const Word& w, int n) { return embed_pi(WordElement(Presentation::ao_star(n), w)); }

bool norm_zero(const FunElement& f, int p_max) {
  return haar_norm_squared(CrossedElement::even(f), p_max).is_zero();
}

// ---------- suites ----------

VerifyReport suite_half_comm(const VerifyParams& p) {
  require_n(p);
  const int n = p.n;
  Battery b("half-comm");
  const auto gens = generators(n);
  b.check("abc-cba", "half-commutation abc = cba for the generators u_ij s", [&] {
    std::size_t count = 0;
    for (std::size_t a = 0; a < gens.size(); ++a)
      for (std::size_t m = 0; m < gens.size(); ++m)
        for (std::size_t c = 0; c < gens.size(); ++c) {
          if (gens[a] * gens[m] * gens[c] != gens[c] * gens[m] * gens[a])
            return fail("triple " + std::to_string(a) + "," + std::to_string(m) + "," + std::to_string(c));
          ++count;
        }
    return pass(std::to_string(count) + " index triples equal exactly");
  });
  b.check("crossed-identity", "u_ij s u_kl s u_pq s = u_ij u_kl^* u_pq s", [&] {
    const CrossedElement s = CrossedElement::s(n);
    std::size_t count = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            for (int q = 1; q <= n; ++q)
              for (int r = 1; r <= n; ++r) {
                const CrossedElement lhs = CrossedElement::even(FunElement::u(n, i, j)) * s *
                                           CrossedElement::even(FunElement::u(n, k, l)) * s *
                                           CrossedElement::even(FunElement::u(n, q, r)) * s;
                const CrossedElement rhs = CrossedElement::odd(FunElement::u(n, i, j) * FunElement::ubar(n, k, l) *
                                                               FunElement::u(n, q, r));
                if (lhs != rhs) return fail("indices " + idx({i, j, k, l, q, r}));
                ++count;
              }
    return pass(std::to_string(count) + " identities hold exactly");
  });
  b.check("self-adjoint", "the generators u_ij s are self-adjoint", [&] {
    for (const auto& g : gens)
      if (crossed_star(g) != g) return fail(g.to_string() + " is not self-adjoint");
    return pass(std::to_string(gens.size()) + " generators");
  });
  b.check("normal-form-image", "pi is constant on half-commutation classes", [&] {
    const std::size_t len = std::min<std::size_t>(p.maxlen, 4);
    std::size_t count = 0;
    for (const Word& w : enumerate_words(Presentation::ao_star(n), len)) {
      if (pi_word(w, n) != pi_word(hc_normal_form(w), n))
        return fail("word " + format_word(w, Presentation::ao_star(n)));
      ++count;
    }
    return pass(std::to_string(count) + " words up to length " + std::to_string(len));
  });
  return b.finish();
}

VerifyReport suite_pun(const VerifyParams& p) {
  require_n(p);
  const int n = p.n;
  Battery b("pun");
  const auto w = [n](int i, int j, int k, int l) { return pun_generator(n, i, j, k, l); };
  const auto delta = [n](bool on) { return FunElement::constant(n, on ? 1 : 0); };
  b.check("row-sum", "sum_j w_{ik,jj} = delta_ik", [&] {
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) {
        FunElement d = delta(i == k) * GaussianRational(-1);
        for (int j = 1; j <= n; ++j) d += w(i, k, j, j);
        if (!norm_zero(d, p.p_max)) return fail("i,k = " + idx({i, k}));
      }
    return pass(std::to_string(n * n) + " relations have Haar norm 0");
  });
  b.check("column-sum", "sum_j w_{jj,ik} = delta_ik", [&] {
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) {
        FunElement d = delta(i == k) * GaussianRational(-1);
        for (int j = 1; j <= n; ++j) d += w(j, j, i, k);
        if (!norm_zero(d, p.p_max)) return fail("i,k = " + idx({i, k}));
      }
    return pass(std::to_string(n * n) + " relations have Haar norm 0");
  });
  b.check("star", "w_{ij,kl}^* = w_{ji,lk}", [&] {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            if (fun_star(w(i, j, k, l)) != w(j, i, l, k)) return fail("indices " + idx({i, j, k, l}));
    return pass(std::to_string(n * n * n * n) + " identities hold exactly");
  });
  b.check("quadratic", "sum_{k,l} w_{ij,kl} w_{pq,kl}^* = delta_ip delta_jq", [&] {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int q = 1; q <= n; ++q)
          for (int r = 1; r <= n; ++r) {
            FunElement d = delta(i == q && j == r) * GaussianRational(-1);
            for (int k = 1; k <= n; ++k)
              for (int l = 1; l <= n; ++l) d += w(i, j, k, l) * fun_star(w(q, r, k, l));
            if (!norm_zero(d, p.p_max)) return fail("indices " + idx({i, j, q, r}));
          }
    return pass(std::to_string(n * n * n * n) + " relations have Haar norm 0");
  });
  return b.finish();
}

VerifyReport suite_kn(const VerifyParams& p) {
  require_n(p, 2);
  const int n = p.n;
  Battery b("kn");
  const GroupModel model{GroupKind::Kn, n};
  std::vector<UnitaryMatrix> samples;
  HaarSampler sampler(model, p.seed);
  for (std::size_t t = 0; t < p.samples; ++t) samples.push_back(sampler());
  const auto family = [&](bool rows) {
    double worst = 0.0;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          if (j == k) continue;
          const FunElement f = rows ? FunElement::u(n, i, j) * FunElement::u(n, i, k)
                                    : FunElement::u(n, k, i) * FunElement::u(n, j, i);
          for (const auto& g : samples) worst = std::max(worst, std::abs(evaluate(f, g)));
        }
    return worst;
  };
  b.check("membership", "K_n: one nonzero entry in each row and column", [&] {
    for (const auto& g : samples)
      if (!contains(model, g)) return fail("sample outside " + model.name());
    return pass(std::to_string(samples.size()) + " samples");
  });
  b.check("row-relation", "v_ij v_ik = 0 for j != k", [&] {
    const double worst = family(true);
    return Outcome{worst < 1e-12, "max |u_ij u_ik| = " + fmt(worst)};
  });
  b.check("column-relation", "v_ki v_ji = 0 for j != k", [&] {
    const double worst = family(false);
    return Outcome{worst < 1e-12, "max |u_ki u_ji| = " + fmt(worst)};
  });
  b.check("mc-zero", "Monte Carlo integral of u_11 u_12 over K_n vanishes", [&] {
    const MCEstimate e = mc_integral(FunElement::u(n, 1, 1) * FunElement::u(n, 1, 2), model,
                                     std::max<std::size_t>(p.samples, 2), p.seed);
    return Outcome{std::abs(e.mean) < 1e-12, "mean = " + fmt(std::abs(e.mean))};
  });
  return b.finish();
}

VerifyReport suite_u2n(const VerifyParams& p) {
  require_n(p);
  const int n = p.n;
  const int m = 2 * n;
  Battery b("u2n");
  const GroupModel model{GroupKind::U2n, n};
  std::vector<UnitaryMatrix> samples;
  HaarSampler sampler(model, p.seed);
  for (std::size_t t = 0; t < p.samples; ++t) samples.push_back(sampler());

  // U_ij = x_ij s + i x_{n+i,j} s inside the crossed product over 2n x 2n symbols.
  const GaussianRational i_unit = GaussianRational::imaginary_unit();
  std::vector<CrossedElement> big_u, big_u_star;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      big_u.push_back(CrossedElement::odd(FunElement::u(m, i, j) + i_unit * FunElement::u(m, n + i, j)));
      big_u_star.push_back(crossed_star(big_u.back()));
    }
  const auto at = [n](int i, int j) { return static_cast<std::size_t>((i - 1) * n + (j - 1)); };

  b.check("block-pattern", "U_{2,n}: unitary matrices of the form [[A,B],[-B,A]]", [&] {
    for (const auto& g : samples)
      if (!contains(model, g)) return fail("sample outside " + model.name());
    return pass(std::to_string(samples.size()) + " samples");
  });
  b.check("unitarity", "U = (U_ij) and its conjugate are unitary", [&] {
    double worst = 0.0;
    for (const auto& g : samples) {
      std::vector<Eigen::Matrix2cd> mu, ms;
      for (std::size_t k = 0; k < big_u.size(); ++k) {
        mu.push_back(matrix_model_eval(big_u[k], g));
        ms.push_back(matrix_model_eval(big_u_star[k], g));
      }
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          Eigen::Matrix2cd a = Eigen::Matrix2cd::Zero(), c = a, d = a, e = a;
          for (int k = 1; k <= n; ++k) {
            a += mu[at(i, k)] * ms[at(j, k)];
            c += ms[at(k, i)] * mu[at(k, j)];
            d += ms[at(i, k)] * mu[at(j, k)];
            e += mu[at(k, i)] * ms[at(k, j)];
          }
          const Eigen::Matrix2cd target = (i == j ? 1.0 : 0.0) * Eigen::Matrix2cd::Identity();
          for (const auto* x : {&a, &c, &d, &e}) worst = std::max(worst, (*x - target).cwiseAbs().maxCoeff());
        }
    }
    return Outcome{worst < 1e-9, "max error " + fmt(worst)};
  });
  b.check("half-commutation", "abc = cba for a, b, c in {U_ij, U_ij^*}", [&] {
    double worst = 0.0;
    for (const auto& g : samples) {
      std::vector<Eigen::Matrix2cd> mats;
      for (std::size_t k = 0; k < big_u.size(); ++k) {
        mats.push_back(matrix_model_eval(big_u[k], g));
        mats.push_back(matrix_model_eval(big_u_star[k], g));
      }
      for (const auto& x : mats)
        for (const auto& y : mats) {
          const Eigen::Matrix2cd xy = x * y, yx = y * x;
          for (const auto& z : mats) worst = std::max(worst, (xy * z - z * yx).cwiseAbs().maxCoeff());
        }
    }
    return Outcome{worst < 1e-9, "max error " + fmt(worst)};
  });
  b.check("star-model", "the matrix model intertwines the involutions", [&] {
    double worst = 0.0;
    for (const auto& g : samples)
      for (std::size_t k = 0; k < big_u.size(); ++k)
        worst = std::max(worst, (matrix_model_eval(big_u_star[k], g) - matrix_model_eval(big_u[k], g).adjoint())
                                    .cwiseAbs()
                                    .maxCoeff());
    return Outcome{worst < 1e-9, "max error " + fmt(worst)};
  });
  return b.finish();
}

// Leg-wise product of two tensors of equal leg count.
CrossedTensor tensor_mul(const CrossedTensor& x, const CrossedTensor& y) {
  CrossedTensor out;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      if (kx.size() != ky.size()) throw UsageError("tensor leg counts differ");
      std::vector<CrossedTensor> legs;
      for (std::size_t l = 0; l < kx.size(); ++l) legs.push_back(as_tensor(basis_element(kx[l]) * basis_element(ky[l])));
      // Expand the leg-wise sums into basis keys.
      std::vector<std::pair<std::vector<CrossedBasis>, GaussianRational>> partial{{{}, cx * cy}};
      for (const auto& leg : legs) {
        std::vector<std::pair<std::vector<CrossedBasis>, GaussianRational>> next;
        for (const auto& [key, c] : partial)
          for (const auto& [lk, lc] : leg.terms()) {
            auto k2 = key;
            k2.push_back(lk[0]);
            next.emplace_back(std::move(k2), c * lc);
          }
        partial = std::move(next);
      }
      for (const auto& [key, c] : partial) out.add(key, c);
    }
  return out;
}

// Image of a word tensor under π on every leg.
CrossedTensor pi_tensor(const WordTensor& t, int n) {
  CrossedTensor out;
  for (const auto& [key, c] : t.terms()) {
    std::vector<std::pair<std::vector<CrossedBasis>, GaussianRational>> partial{{{}, c}};
    for (const Word& w : key) {
      std::vector<std::pair<std::vector<CrossedBasis>, GaussianRational>> next;
      const CrossedTensor image = as_tensor(pi_word(w, n));
      for (const auto& [pk, pc] : partial)
        for (const auto& [lk, lc] : image.terms()) {
          auto k2 = pk;
          k2.push_back(lk[0]);
          next.emplace_back(std::move(k2), pc * lc);
        }
      partial = std::move(next);
    }
    for (const auto& [key2, c2] : partial) out.add(key2, c2);
  }
  return out;
}

VerifyReport suite_hopf(const VerifyParams& p) {
  require_n(p);
  const int n = p.n;
  Battery b("hopf");
  const auto gens = generators(n);
  std::vector<CrossedElement> elems = gens;
  for (const auto& x : gens)
    for (const auto& y : gens) elems.push_back(x * y);
  const std::size_t cap = p.degree_cap;

  b.check("coassociativity", "(Delta x id) Delta = (id x Delta) Delta", [&] {
    for (const auto& x : elems) {
      const CrossedTensor d = crossed_coproduct(x, cap);
      if (crossed_coproduct_on_leg(d, 0, cap) != crossed_coproduct_on_leg(d, 1, cap))
        return fail("fails on " + x.to_string());
    }
    return pass(std::to_string(elems.size()) + " elements of degree <= 2");
  });
  b.check("counit", "(epsilon x id) Delta = id = (id x epsilon) Delta", [&] {
    for (const auto& x : elems) {
      const CrossedTensor d = crossed_coproduct(x, cap);
      const CrossedTensor one = as_tensor(x);
      if (crossed_counit_on_leg(d, 0) != one || crossed_counit_on_leg(d, 1) != one)
        return fail("fails on " + x.to_string());
    }
    return pass(std::to_string(elems.size()) + " elements of degree <= 2");
  });
  b.check("antipode", "m(S x id) Delta = epsilon 1 = m(id x S) Delta", [&] {
    for (const auto& x : gens) {
      const CrossedTensor d = crossed_coproduct(x, cap);
      const CrossedElement target = CrossedElement::one(n) * crossed_counit(x);
      if (!norm_equal(multiply_legs(d, n, 0), target, p.p_max) || !norm_equal(multiply_legs(d, n, 1), target, p.p_max))
        return fail("fails on " + x.to_string());
    }
    return pass(std::to_string(gens.size()) + " generators, decided by the Haar norm");
  });
  b.check("antipode-involution", "S^2 = id", [&] {
    std::vector<CrossedElement> batch = elems;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        batch.push_back(CrossedElement::even(FunElement::u(n, i, j) * FunElement::ubar(n, j, i)));
        batch.push_back(CrossedElement::even(FunElement::u(n, i, j)));
      }
    for (const auto& x : batch)
      if (crossed_antipode(crossed_antipode(x)) != x) return fail("fails on " + x.to_string());
    return pass(std::to_string(batch.size()) + " elements of degree <= 2");
  });
  b.check("multiplicativity", "Delta(xy) = Delta(x) Delta(y)", [&] {
    for (const auto& x : gens)
      for (const auto& y : gens)
        if (crossed_coproduct(x * y, cap) != tensor_mul(crossed_coproduct(x, cap), crossed_coproduct(y, cap)))
          return fail("fails on " + x.to_string() + " * " + y.to_string());
    return pass(std::to_string(gens.size() * gens.size()) + " generator pairs");
  });
  b.check("word-coassociativity", "coassociativity on words of A_o^*(n)", [&] {
    const Presentation pres = Presentation::ao_star(n);
    std::size_t count = 0;
    for (const Word& w : enumerate_words(pres, 2)) {
      const WordTensor d = coproduct_element(WordElement(pres, w), cap);
      if (coproduct_on_leg(d, pres, 0, cap) != coproduct_on_leg(d, pres, 1, cap))
        return fail("fails on " + format_word(w, pres));
      const WordTensor one = as_tensor(WordElement(pres, w));
      if (counit_on_leg(d, 0) != one || counit_on_leg(d, 1) != one) return fail("counit fails on " + format_word(w, pres));
      ++count;
    }
    return pass(std::to_string(count) + " words of length <= 2");
  });
  b.check("pi-coalgebra-map", "(pi x pi) Delta = Delta pi on A_o^*(n)", [&] {
    const Presentation pres = Presentation::ao_star(n);
    std::size_t count = 0;
    for (const Word& w : enumerate_words(pres, 3)) {
      if (pi_tensor(coproduct_element(WordElement(pres, w), cap), n) != crossed_coproduct(pi_word(w, n), cap))
        return fail("fails on " + format_word(w, pres));
      ++count;
    }
    return pass(std::to_string(count) + " words of length <= 3");
  });
  return b.finish();
}

VerifyReport suite_sequence(const VerifyParams& p) {
  require_n(p);
  const int n = p.n;
  Battery b("sequence");
  const auto q = [n](const CrossedElement& x) {
    return CrossedElement(FunElement::constant(n, fun_counit(x.f0())), FunElement::constant(n, fun_counit(x.f1())));
  };
  b.check("q-generators", "q(u_ij s) = delta_ij s", [&] {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const CrossedElement expected = i == j ? CrossedElement::s(n) : CrossedElement(n);
        if (q(CrossedElement::generator(n, i, j)) != expected) return fail("i,j = " + idx({i, j}));
      }
    return pass(std::to_string(n * n) + " generators");
  });
  b.check("coinvariant-generators", "products u_ij s u_kl s = u_ij u_kl^* are q-coinvariant", [&] {
    const auto gens = generators(n);
    for (const auto& x : gens) {
      if (coinvariant_test(x, p.degree_cap)) return fail(x.to_string() + " reported coinvariant");
      for (const auto& y : gens)
        if (!coinvariant_test(x * y, p.degree_cap)) return fail((x * y).to_string() + " not coinvariant");
    }
    return pass("odd generators excluded, all quadratic products coinvariant");
  });
  b.check("coinvariant-parity", "coinvariants of q are exactly the even part", [&] {
    const std::size_t len = std::min<std::size_t>(p.maxlen, 3);
    std::size_t count = 0;
    for (const Word& w : enumerate_words(Presentation::ao_star(n), len)) {
      if (coinvariant_test(pi_word(w, n), p.degree_cap) != (w.size() % 2 == 0))
        return fail("word " + format_word(w, Presentation::ao_star(n)));
      ++count;
    }
    return pass(std::to_string(count) + " words, both characterizations agree");
  });
  return b.finish();
}

VerifyReport suite_rewrite(const VerifyParams& p) {
  require_n(p);
  const int n = p.n;
  Battery b("rewrite-oracle");
  const Presentation ao = Presentation::ao_star(n);
  const Presentation ah = Presentation::ah_star(n);
  const auto words = enumerate_words(ao, p.maxlen);
  std::map<Word, std::size_t> class_size;
  for (const Word& w : words) ++class_size[hc_normal_form(w)];

  // One closure per class; both checks read from it.
  std::map<Word, ClosureResult> closures;
  std::string nf_failure, zero_failure;
  std::size_t zero_words = 0;
  for (const Word& w : words) {
    const Word nf = hc_normal_form(w);
    auto it = closures.find(nf);
    if (it == closures.end()) {
      it = closures.emplace(nf, rewrite_closure_oracle(w, ah, 1u << 20)).first;
      const ClosureResult& c = it->second;
      const bool same_nf = std::all_of(c.words.begin(), c.words.end(), [&](const Word& x) { return hc_normal_form(x) == nf; });
      if (nf_failure.empty() && (!same_nf || c.words.size() != class_size[nf]))
        nf_failure = "class of " + format_word(w, ao);
    }
    const bool predicted = ah_zero_test(w, ah);
    zero_words += predicted;
    if (zero_failure.empty() && predicted != it->second.reaches_zero) zero_failure = "word " + format_word(w, ah);
  }
  b.check("normal-form-vs-closure", "half-commutation congruence classes", [&] {
    if (!nf_failure.empty()) return fail(nf_failure);
    return pass(std::to_string(words.size()) + " words, " + std::to_string(closures.size()) + " classes");
  });
  b.check("ah-zero-vs-closure", "A_h^*(n): v_ij v_ik = 0 = v_ki v_ji", [&] {
    if (!zero_failure.empty()) return fail(zero_failure);
    return pass(std::to_string(words.size()) + " words, " + std::to_string(zero_words) + " zero");
  });
  b.check("normal-form-idempotent", "normal form is a fixed point of itself", [&] {
    for (const Word& w : words)
      if (hc_normal_form(hc_normal_form(w)) != hc_normal_form(w)) return fail("word " + format_word(w, ao));
    return pass(std::to_string(words.size()) + " words");
  });
  return b.finish();
}

VerifyReport suite_moments(const VerifyParams& p) {
  require_n(p);
  if (p.k < 1) throw UsageError("moments needs --k >= 1");
  Battery b("moments");
  b.check("crosscheck", "multiplicity of the trivial comodule equals the Haar integral of the character power", [&] {
    const MomentCheck m = moment_crosscheck(p.n, p.k, p.p_max);
    const std::string detail =
        "fusion_count = " + std::to_string(m.fusion_count) + ", haar_value = " + m.haar_value.to_string();
    return Outcome{GaussianRational(m.fusion_count) == m.haar_value, detail};
  });
  return b.finish();
}

VerifyReport suite_weingarten(const VerifyParams& p) {
  require_n(p);
  const int n = p.n;
  Battery b("weingarten");
  const int top = std::min(3, p.p_max);
  b.check("inverse-identity", "sum_tau n^{#(sigma tau^-1)} Wg(tau rho^-1) = delta_{sigma rho}", [&] {
    std::string note;
    for (int deg = 1; deg <= top; ++deg) {
      const auto table = weingarten_table(deg, n, p.p_max);
      const auto perms = all_permutations(deg);
      const RationalMatrix g = gram_matrix(deg, n);
      RationalMatrix w(perms.size(), perms.size());
      for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t c = 0; c < perms.size(); ++c) w(a, c) = (*table)(compose(perms[a], inverse(perms[c])));
      if (table->full_rank) {
        if (!(g * w == RationalMatrix::identity(perms.size()))) return fail("p = " + std::to_string(deg));
      } else {
        // Singular regime: the table is the Moore-Penrose inverse, so G W G = G and W G W = W.
        if (!(g * w * g == g) || !(w * g * w == w)) return fail("pseudo-inverse identities, p = " + std::to_string(deg));
        note += " (p = " + std::to_string(deg) + " pseudo-inverse)";
      }
    }
    return pass("p <= " + std::to_string(top) + note);
  });
  b.check("class-function", "Wg is a class function invariant under inversion", [&] {
    for (int deg = 1; deg <= top; ++deg) {
      const auto table = weingarten_table(deg, n, p.p_max);
      const auto perms = all_permutations(deg);
      for (const auto& s : perms) {
        if ((*table)(s) != (*table)(inverse(s))) return fail("inversion, p = " + std::to_string(deg));
        for (const auto& t : perms)
          if ((*table)(s) != (*table)(compose(compose(t, s), inverse(t))))
            return fail("conjugation, p = " + std::to_string(deg));
      }
    }
    return pass("p <= " + std::to_string(top));
  });
  b.check("mc-agreement", "exact Haar integrals agree with Monte Carlo within 5 stderr", [&] {
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<int> index(1, n);
    std::uniform_int_distribution<int> degree(1, 2);
    const GroupModel model{GroupKind::Un, n};
    double worst_ratio = 0.0;
    for (int t = 0; t < 20; ++t) {
      const int deg = degree(rng);
      FunElement f = FunElement::constant(n, 1);
      for (int k = 0; k < deg; ++k) {
        const int r = index(rng), c = index(rng);
        f = f * FunElement::u(n, r, c);
      }
      for (int k = 0; k < deg; ++k) {
        const int r = index(rng), c = index(rng);
        f = f * FunElement::ubar(n, r, c);
      }
      const std::complex<double> exact = haar_integral(f, p.p_max).to_complex();
      const MCEstimate e = mc_integral(f, model, std::max<std::size_t>(p.samples, 2), p.seed + static_cast<unsigned>(t));
      const double err = std::abs(e.mean - exact);
      const double bound = 5.0 * e.std_error;
      if (!(err < bound || (e.std_error == 0.0 && err < 1e-12)))
        return fail(f.to_string() + ": |exact - mc| = " + fmt(err) + " >= " + fmt(bound));
      if (bound > 0) worst_ratio = std::max(worst_ratio, err / e.std_error);
    }
    return pass("20 balanced monomials, worst deviation " + fmt(worst_ratio) + " stderr");
  });
  return b.finish();
}

VerifyReport suite_predicates(const VerifyParams& p) {
  Battery b("predicates");
  const int trials = static_cast<int>(std::max<std::size_t>(p.samples, 1));
  b.check("on3-non-real", "O_n is not non-real", [&] {
    const auto r = predicate({GroupKind::On, 3}, Predicate::NonReal, trials, p.seed);
    return Outcome{!r.holds, r.proven ? "structurally real" : "no witness found"};
  });
  const auto doubly = [&](GroupModel model) {
    const auto r = predicate(model, Predicate::DoublyNonReal, trials, p.seed);
    if (!r.holds || !r.witness) return fail("no witness for " + model.name());
    const auto& w = *r.witness;
    const auto v = w.g(w.indices[0] - 1, w.indices[1] - 1) * std::conj(w.g(w.indices[2] - 1, w.indices[3] - 1));
    if (std::abs(v.imag()) <= kWitnessThreshold) return fail("witness does not re-evaluate");
    return pass(model.name() + ": g_" + std::to_string(w.indices[0]) + std::to_string(w.indices[1]) + " conj(g_" +
                std::to_string(w.indices[2]) + std::to_string(w.indices[3]) + ") has imaginary part " + fmt(v.imag()));
  };
  b.check("un2-doubly-non-real", "U_n is doubly non-real", [&] { return doubly({GroupKind::Un, 2}); });
  b.check("kn2-doubly-non-real", "K_n is doubly non-real", [&] { return doubly({GroupKind::Kn, 2}); });
  b.check("u2n2-doubly-non-real", "U_{2,n} is doubly non-real for n >= 2", [&] { return doubly({GroupKind::U2n, 2}); });
  b.check("u2n1-real-products", "U_{2,1} has real products g_ij conj(g_kl)", [&] {
    const auto r = predicate({GroupKind::U2n, 1}, Predicate::DoublyNonReal, trials, p.seed);
    if (r.holds) return fail("unexpected witness");
    return pass(r.proven ? "structurally real" : "no witness in " + std::to_string(r.trials_run) + " samples");
  });
  b.check("transpose-closure", "every shipped model is self-transpose", [&] {
    for (GroupKind kind : {GroupKind::Un, GroupKind::On, GroupKind::SUn, GroupKind::TorusN, GroupKind::Kn, GroupKind::U2n})
      for (int n : {1, 2, 3}) {
        const GroupModel model{kind, n};
        if (!predicate(model, Predicate::SelfTranspose, trials, p.seed).holds) return fail(model.name());
      }
    return pass("6 models, n <= 3, " + std::to_string(trials) + " samples each");
  });
  return b.finish();
}

VerifyReport suite_equality(const VerifyParams& p) {
  require_n(p);
  const int n = p.n;
  Battery b("equality");
  const Presentation ao = Presentation::ao_star(n);
  const std::size_t len = std::min<std::size_t>(p.maxlen, 3);
  b.check("normal-form-soundness", "half-commuting words have equal images", [&] {
    const auto words = enumerate_words(ao, len);
    for (const Word& w : words)
      if (!norm_equal(pi_word(w, n), pi_word(hc_normal_form(w), n), p.p_max)) return fail(format_word(w, ao));
    return pass(std::to_string(words.size()) + " words");
  });
  b.check("parity-separation", "pi separates generators and words of different length parity", [&] {
    std::set<Word> forms;
    for (const Word& w : enumerate_words(ao, len)) forms.insert(hc_normal_form(w));
    const std::vector<Word> list(forms.begin(), forms.end());
    std::vector<CrossedElement> images;
    for (const Word& w : list) images.push_back(pi_word(w, n));
    std::size_t collisions = 0;
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t c = a + 1; c < list.size(); ++c) {
        if (!norm_equal(images[a], images[c], p.p_max)) continue;
        // Orthogonality identifies some distinct normal forms (v11 v11 = v22 v22 for n = 2),
        // but never a generator with another word, nor words of different parity.
        if (list[a].size() % 2 != list[c].size() % 2 || list[a].size() == 1 || list[c].size() == 1)
          return fail(format_word(list[a], ao) + " vs " + format_word(list[c], ao));
        ++collisions;
      }
    return pass(std::to_string(list.size()) + " normal forms, " + std::to_string(collisions) +
                " pairs identified by the orthogonality relations");
  });
  b.check("row-orthogonality", "sum_k v_1k v_2k = 0 in the image", [&] {
    if (n < 2) return pass("needs n >= 2, nothing to check");
    CrossedElement x(n);
    for (int k = 1; k <= n; ++k) x += CrossedElement::generator(n, 1, k) * CrossedElement::generator(n, 2, k);
    const GaussianRational norm = haar_norm_squared(x, p.p_max);
    return Outcome{norm.is_zero(), "Haar norm " + norm.to_string()};
  });
  return b.finish();
}

VerifyReport suite_fusion(const VerifyParams& p) {
  const auto data = make_fusion_data(p.group);
  const FusionData& d = *data;
  Battery b("fusion");
  const auto labels = fusion_table_labels(d, p.cap);
  const auto bases = d.labels_up_to(p.cap);
  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  const auto random_label = [&] { return labels[pick(rng)]; };
  const AStarLabel unit{d.unit(), 0};
  const auto single = [](const AStarLabel& l) { return Multiset<AStarLabel>{{l, 1}}; };
  const auto mult = [](const Multiset<AStarLabel>& m, const AStarLabel& l) {
    const auto it = m.find(l);
    return it == m.end() ? 0L : it->second;
  };

  b.check("associativity", "(x y) z = x (y z)", [&] {
    for (int t = 0; t < p.triples; ++t) {
      const auto x = random_label(), y = random_label(), z = random_label();
      if (astar_tensor(astar_tensor(single(x), single(y), d), single(z), d) !=
          astar_tensor(single(x), astar_tensor(single(y), single(z), d), d))
        return fail(format_astar(x, d) + " " + format_astar(y, d) + " " + format_astar(z, d));
    }
    return pass(std::to_string(p.triples) + " random triples");
  });
  b.check("dimension", "dimensions multiply", [&] {
    for (const auto& x : labels)
      for (const auto& y : labels) {
        long total = 0;
        for (const auto& [c, m] : astar_tensor(x, y, d)) total += m * astar_dim(c, d);
        if (total != astar_dim(x, d) * astar_dim(y, d)) return fail(format_astar(x, d) + " " + format_astar(y, d));
      }
    return pass(std::to_string(labels.size() * labels.size()) + " ordered pairs");
  });
  b.check("frobenius", "mult(c in a b) = mult(1 in a b conj(c))", [&] {
    std::size_t count = 0;
    for (int t = 0; t < p.triples; ++t) {
      const auto x = random_label(), y = random_label();
      const auto prod = astar_tensor(x, y, d);
      std::vector<AStarLabel> targets{random_label()};
      for (const auto& [c, m] : prod) targets.push_back(c);
      for (const auto& c : targets) {
        const auto lhs = mult(prod, c);
        const auto rhs = mult(astar_tensor(prod, single(astar_dual(c, d)), d), unit);
        if (lhs != rhs) return fail(format_astar(x, d) + " " + format_astar(y, d) + " -> " + format_astar(c, d));
        ++count;
      }
    }
    return pass(std::to_string(count) + " multiplicities");
  });
  b.check("duality", "the unit occurs once in x conj(x), conj is involutive", [&] {
    for (const auto& x : labels) {
      const auto xd = astar_dual(x, d);
      if (astar_dual(xd, d) != x) return fail("involution at " + format_astar(x, d));
      if (mult(astar_tensor(x, xd, d), unit) != 1) return fail("unit multiplicity at " + format_astar(x, d));
    }
    return pass(std::to_string(labels.size()) + " labels");
  });
  b.check("grading", "Ws W's = W W'^sigma, parities add", [&] {
    for (int t = 0; t < p.triples; ++t) {
      const auto x = random_label(), y = random_label();
      const int expected = d.grade(x.base) + (x.parity ? -d.grade(y.base) : d.grade(y.base));
      for (const auto& [c, m] : astar_tensor(x, y, d)) {
        if (c.parity != (x.parity ^ y.parity)) return fail("parity of " + format_astar(c, d));
        if (d.z_graded() && d.grade(c.base) != expected) return fail("grade of " + format_astar(c, d));
        if (!d.z_graded() && ((d.grade(c.base) - expected) % 2 + 2) % 2 != 0)
          return fail("grade parity of " + format_astar(c, d));
      }
    }
    return pass(std::to_string(p.triples) + " random pairs");
  });
  b.check("structure-maps", "dual and sigma are involutive; grade(unit) = 0, grade(U) = 1", [&] {
    if (d.grade(d.unit()) != 0) return fail("grade of the unit");
    for (const auto& [u, m] : d.fundamental())
      if (d.grade(u) != 1) return fail("grade of " + d.format(u));
    for (const auto& a : bases) {
      if (d.dual(d.dual(a)) != a || d.sigma(d.sigma(a)) != a) return fail("involution at " + d.format(a));
      const int g = d.grade(a), gs = d.grade(d.sigma(a));
      if (d.z_graded() ? gs != -g : (gs - g) % 2 != 0) return fail("sigma grade at " + d.format(a));
    }
    return pass(std::to_string(bases.size()) + " labels");
  });
  b.check("sigma-equals-dual", "V^sigma = conj(V) on this instance", [&] {
    for (const auto& a : bases)
      if (d.sigma(a) != d.dual(a)) return fail(d.format(a));
    return pass(std::to_string(bases.size()) + " labels");
  });
  b.check("grade-classes-disjoint", "Irr(G)_[0] and Irr(G)_[1] are disjoint", [&] {
    for (const auto& a : bases)
      if (d.in_grade_class(a, 0) && d.in_grade_class(a, 1)) return fail(d.format(a));
    return pass(std::to_string(bases.size()) + " labels");
  });
  if (const auto* un = dynamic_cast<const UnitaryFusion*>(&d); un && un->rank() >= 2) {
    const int n = un->rank();
    std::vector<int> fund(static_cast<std::size_t>(n), 0), minus(fund), det2(fund);
    fund[0] = 1;
    minus[0] = 1;
    minus[static_cast<std::size_t>(n - 1)] = -1;
    det2[0] = det2[1] = 1;
    b.check("fundamental-square", "Ws W's = W W'^sigma for W = W' = U", [&] {
      const AStarLabel us{IrrLabel{fund}, 1};
      const Multiset<AStarLabel> expected{{AStarLabel{IrrLabel{minus}, 0}, 1}, {unit, 1}};
      const auto got = astar_tensor(us, us, d);
      std::string text;
      for (const auto& [c, m] : got) text += (text.empty() ? "" : " + ") + format_astar(c, d);
      return Outcome{got == expected, "(U,s)(U,s) = " + text};
    });
    if (n >= 3)
      b.check("noncommutative", "ordered products of simples need not commute", [&] {
        const AStarLabel x{IrrLabel{fund}, 1}, y{IrrLabel{det2}, 0};
        return Outcome{astar_tensor(x, y, d) != astar_tensor(y, x, d),
                       format_astar(x, d) + " and " + format_astar(y, d) + " do not commute"};
      });
  }
  return b.finish();
}

using SuiteFn = VerifyReport (*)(const VerifyParams&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites{
      {"equality", suite_equality},   {"fusion", suite_fusion},         {"half-comm", suite_half_comm},
      {"hopf", suite_hopf},           {"kn", suite_kn},                 {"moments", suite_moments},
      {"predicates", suite_predicates}, {"pun", suite_pun},             {"rewrite-oracle", suite_rewrite},
      {"sequence", suite_sequence},   {"u2n", suite_u2n},               {"weingarten", suite_weingarten},
  };
  return suites;
}

} // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::to_json_lines() const {
  std::string out;
  for (const auto& c : checks) {
    nlohmann::ordered_json line;
    line["suite"] = c.suite;
    line["check"] = c.id;
    line["anchor"] = c.anchor;
    line["status"] = c.passed ? "pass" : "fail";
    line["detail"] = c.detail;
    out += line.dump() + "\n";
  }
  return out;
}

std::vector<std::string> verify_suites() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

VerifyReport run_verify(const std::string& suite, const VerifyParams& params) {
  const auto& suites = registry();
  const auto it = suites.find(suite);
  if (it == suites.end()) {
    std::string known;
    for (const auto& [name, fn] : suites) known += (known.empty() ? "" : ", ") + name;
    throw UsageError("unknown suite '" + suite + "' (known: " + known + ")");
  }
  return it->second(params);
}

} // namespace halfcomm
