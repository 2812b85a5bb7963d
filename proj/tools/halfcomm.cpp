// halfcomm: command-line front end to the half-commutation toolkit.
// Exit codes: 0 success / check passed, 1 check failed or computation error, 2 usage error.

#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "halfcomm/crossed.hpp"
#include "halfcomm/errors.hpp"
#include "halfcomm/expression.hpp"
#include "halfcomm/fusion.hpp"
#include "halfcomm/fusion_table.hpp"
#include "halfcomm/groups.hpp"
#include "halfcomm/haar.hpp"
#include "halfcomm/verify.hpp"
#include "halfcomm/words.hpp"

namespace hc = halfcomm;
using nlohmann::ordered_json;

namespace {

struct Globals {
  std::uint64_t seed = hc::kDefaultSeed;
  std::size_t samples = 100000;
  std::size_t degree_cap = hc::kDefaultDegreeCap;
  int p_max = hc::kDefaultMaxDegree;
  bool json = false;
};

void echo_config(const std::string& command, const Globals& g, ordered_json extra) {
  ordered_json cfg;
  cfg["command"] = command;
  cfg["seed"] = g.seed;
  cfg["samples"] = g.samples;
  cfg["degree_cap"] = g.degree_cap;
  cfg["p_max"] = g.p_max;
  cfg["json"] = g.json;
  for (auto& [k, v] : extra.items()) cfg[k] = v;
  std::cerr << "config " << cfg.dump() << "\n";
}

// Crossed-product image of an expression: π for word presentations, identity otherwise.
hc::CrossedElement to_crossed(const hc::Expression& e) {
  if (const auto* w = std::get_if<hc::WordElement>(&e)) return hc::embed_pi(*w);
  return std::get<hc::CrossedElement>(e);
}

// The group whose A_* realizes the presentation: U_n, K_n, or U_{2,n}.
hc::GroupModel natural_group(const hc::ExpressionContext& ctx) {
  if (ctx.crossed) return {hc::GroupKind::Un, ctx.n};
  switch (ctx.presentation.kind) {
  case hc::PresentationKind::AoStar: return {hc::GroupKind::Un, ctx.n};
  case hc::PresentationKind::AhStar: return {hc::GroupKind::Kn, ctx.n};
  case hc::PresentationKind::AuStarStar: return {hc::GroupKind::U2n, ctx.n};
  }
  return {hc::GroupKind::Un, ctx.n};
}

ordered_json mc_json(const hc::MCEstimate& e) {
  ordered_json j;
  j["mean_re"] = e.mean.real();
  j["mean_im"] = e.mean.imag();
  j["stderr"] = e.std_error;
  j["samples"] = e.samples;
  j["seed"] = e.seed;
  return j;
}

std::string format_complex(std::complex<double> z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

std::string format_decomposition(const std::vector<std::pair<std::string, long>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [label, m] : terms) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m) + "*";
    out += label;
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Half-commutation toolkit: normal forms, crossed products, Haar states and fusion rules"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "RNG seed for every randomized step")->capture_default_str();
  app.add_option("--samples", g.samples, "Monte Carlo samples / sampled trials")->capture_default_str();
  app.add_option("--degree-cap", g.degree_cap, "Maximal word length expanded by coproducts")->capture_default_str();
  app.add_option("--p-max", g.p_max, "Maximal Weingarten degree")->capture_default_str();
  app.add_flag("--json", g.json, "Machine-readable output");

  std::string context = "ao-star:2";
  std::string expr1, expr2;

  auto* normalize = app.add_subcommand("normalize", "Print the normal form of an expression");
  normalize->add_option("-p,--presentation", context, "ao-star:N, ah-star:N, au-star-star:N or crossed:N")
      ->capture_default_str();
  normalize->add_option("expr", expr1, "Expression")->required();

  std::string group;
  auto* equal = app.add_subcommand("equal", "Decide equality of two expressions");
  equal->add_option("-p,--presentation", context, "ao-star:N, ah-star:N, au-star-star:N or crossed:N")
      ->capture_default_str();
  equal->add_option("--group", group, "Group model used for the Haar test (default: the presentation's own)");
  equal->add_option("lhs", expr1, "First expression")->required();
  equal->add_option("rhs", expr2, "Second expression")->required();

  bool exact = false, mc = false;
  auto* haar = app.add_subcommand("haar", "Haar state of an expression");
  haar->add_option("-p,--presentation", context, "Expression context (default crossed:N of the group)");
  haar->add_option("--group", group, "Group model")->default_val("un:2");
  auto* exact_flag = haar->add_flag("--exact", exact, "Exact Weingarten integration (U_n only)");
  auto* mc_flag = haar->add_flag("--mc", mc, "Monte Carlo estimate");
  exact_flag->excludes(mc_flag);
  haar->add_option("expr", expr1, "Expression")->required();

  std::string fusion_group = "un:2";
  std::string x_label, y_label;
  auto* fuse = app.add_subcommand("fuse", "Decompose an ordered tensor product of simples");
  fuse->add_option("--group", fusion_group, "un:N, sun:2 or torus:N")->capture_default_str();
  fuse->add_option("x", x_label, "Label such as ([1,0],s), or a plain G-label such as [1,0]")->required();
  fuse->add_option("y", y_label, "Label of the same kind")->required();

  int cap = 2;
  std::string output;
  bool strict = false;
  auto* table = app.add_subcommand("fusion-table", "Export the fusion rules of A_*(G) as JSON");
  table->add_option("--group", fusion_group, "un:N, sun:2 or torus:N")->capture_default_str();
  table->add_option("--cap", cap, "Keep labels of size at most cap")->capture_default_str();
  table->add_option("-o,--output", output, "Output path (default: stdout)");
  table->add_flag("--strict", strict, "Keep only labels with base in Irr(G)_[0] or Irr(G)_[1]");

  hc::VerifyParams vp;
  std::string suite;
  bool list = false;
  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("--suite", suite, "Suite name");
  verify->add_flag("--list", list, "List the suites");
  verify->add_option("--n", vp.n, "Dimension")->capture_default_str();
  verify->add_option("--k", vp.k, "Moment order (moments suite)")->capture_default_str();
  verify->add_option("--maxlen", vp.maxlen, "Maximal word length")->capture_default_str();
  verify->add_option("--group", vp.group, "Fusion instance (fusion suite)")->capture_default_str();
  verify->add_option("--cap", vp.cap, "Label size cap (fusion suite)")->capture_default_str();
  verify->add_option("--triples", vp.triples, "Random triples (fusion suite)")->capture_default_str();

  std::string model_text = "un:2";
  auto* predicates = app.add_subcommand("predicates", "Self-transpose / non-real / doubly non-real tests");
  predicates->add_option("--group", model_text, "Group model")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*normalize) {
      const auto ctx = hc::ExpressionContext::parse(context);
      echo_config("normalize", g, {{"presentation", ctx.name()}, {"expr", expr1}});
      const std::string nf = hc::to_string(hc::parse_expression(expr1, ctx));
      if (g.json) std::cout << ordered_json{{"presentation", ctx.name()}, {"normal_form", nf}}.dump() << "\n";
      else std::cout << nf << "\n";
      return 0;
    }

    if (*equal) {
      const auto ctx = hc::ExpressionContext::parse(context);
      hc::GroupModel model = group.empty() ? natural_group(ctx) : hc::GroupModel::parse(group);
      echo_config("equal", g, {{"presentation", ctx.name()}, {"group", model.name()}, {"lhs", expr1}, {"rhs", expr2}});
      const auto lhs = hc::parse_expression(expr1, ctx);
      const auto rhs = hc::parse_expression(expr2, ctx);
      ordered_json out;
      bool result = false;
      if (hc::to_string(lhs) == hc::to_string(rhs)) {
        result = true;
        out["method"] = "normal-form";
      } else {
        const hc::CrossedElement a = to_crossed(lhs), b = to_crossed(rhs);
        if (a.dimension() != model.ambient_dim())
          throw hc::UsageError("expression symbols have dimension " + std::to_string(a.dimension()) + " but " +
                               model.name() + " acts in dimension " + std::to_string(model.ambient_dim()));
        if (model.kind == hc::GroupKind::Un) {
          const auto norm = hc::haar_norm_squared(a - b, g.p_max);
          result = norm.is_zero();
          out["method"] = "exact-haar-norm";
          out["norm"] = norm.to_string();
        } else {
          const auto pe = hc::mc_norm_equal(a, b, model, g.samples, g.seed);
          result = pe.equal;
          out["method"] = "probabilistic-haar-norm";
          out["norm"] = mc_json(pe.norm);
          out["threshold"] = pe.threshold;
        }
      }
      out["equal"] = result;
      if (g.json) std::cout << out.dump() << "\n";
      else
        std::cout << (result ? "equal" : "not equal") << " (" << out["method"].get<std::string>() << ")\n";
      return result ? 0 : 1;
    }

    if (*haar) {
      const hc::GroupModel model = hc::GroupModel::parse(group);
      const auto ctx = hc::ExpressionContext::parse(context.empty() || haar->count("--presentation") == 0
                                                        ? "crossed:" + std::to_string(model.ambient_dim())
                                                        : context);
      const bool use_mc = mc || (!exact && model.kind != hc::GroupKind::Un);
      echo_config("haar", g, {{"group", model.name()}, {"presentation", ctx.name()}, {"method", use_mc ? "mc" : "exact"},
                              {"expr", expr1}});
      const hc::CrossedElement x = to_crossed(hc::parse_expression(expr1, ctx));
      if (!use_mc) {
        if (model.kind != hc::GroupKind::Un)
          throw hc::UsageError("exact integration is only available for un:N; use --mc for " + model.name());
        if (x.dimension() != model.n)
          throw hc::UsageError("expression symbols have dimension " + std::to_string(x.dimension()) + ", group is " +
                               model.name());
        const auto v = hc::haar_state(x, g.p_max);
        if (g.json) std::cout << ordered_json{{"value", v.to_string()}, {"re", v.re().get_str()}, {"im", v.im().get_str()}}.dump() << "\n";
        else std::cout << v.to_string() << "\n";
      } else {
        std::cout << mc_json(hc::mc_integral(x, model, g.samples, g.seed)).dump() << "\n";
      }
      return 0;
    }

    if (*fuse) {
      echo_config("fuse", g, {{"group", fusion_group}, {"x", x_label}, {"y", y_label}});
      const auto data = hc::make_fusion_data(fusion_group);
      std::vector<std::pair<std::string, long>> terms;
      const bool starred = !x_label.empty() && x_label.front() == '(';
      if (starred) {
        const auto x = hc::parse_astar(x_label, *data), y = hc::parse_astar(y_label, *data);
        for (const auto& [c, m] : hc::astar_tensor(x, y, *data)) terms.emplace_back(hc::format_astar(c, *data), m);
      } else {
        const auto x = data->parse(x_label), y = data->parse(y_label);
        for (const auto& [c, m] : data->tensor(x, y)) terms.emplace_back(data->format(c), m);
      }
      std::sort(terms.begin(), terms.end());
      if (g.json) {
        ordered_json result = ordered_json::array();
        for (const auto& [label, m] : terms) result.push_back(ordered_json{{"label", label}, {"mult", m}});
        std::cout << ordered_json{{"group", data->name()}, {"x", x_label}, {"y", y_label}, {"result", result}}.dump()
                  << "\n";
      } else {
        std::cout << format_decomposition(terms) << "\n";
      }
      return 0;
    }

    if (*table) {
      echo_config("fusion-table", g, {{"group", fusion_group}, {"cap", cap}, {"strict", strict}, {"output", output}});
      if (output.empty()) std::cout << hc::fusion_table_json(*hc::make_fusion_data(fusion_group), cap, strict);
      else hc::export_fusion_table(fusion_group, cap, output, strict);
      return 0;
    }

    if (*verify) {
      if (list) {
        for (const auto& name : hc::verify_suites()) std::cout << name << "\n";
        return 0;
      }
      if (suite.empty()) throw hc::UsageError("verify needs --suite (or --list)");
      vp.seed = g.seed;
      vp.p_max = g.p_max;
      vp.degree_cap = g.degree_cap;
      if (app.get_option("--samples")->count() > 0) vp.samples = g.samples;
      echo_config("verify", g, {{"suite", suite}, {"n", vp.n}, {"k", vp.k}, {"maxlen", vp.maxlen}, {"group", vp.group},
                                {"cap", vp.cap}, {"triples", vp.triples}, {"suite_samples", vp.samples}});
      const hc::VerifyReport report = hc::run_verify(suite, vp);
      std::cout << report.to_json_lines();
      return report.exit_code();
    }

    if (*predicates) {
      const hc::GroupModel model = hc::GroupModel::parse(model_text);
      const int trials = static_cast<int>(std::min<std::size_t>(g.samples, 1000000));
      echo_config("predicates", g, {{"group", model.name()}, {"trials", trials}});
      ordered_json out = ordered_json::array();
      const std::pair<const char*, hc::Predicate> which[] = {{"self_transpose", hc::Predicate::SelfTranspose},
                                                             {"non_real", hc::Predicate::NonReal},
                                                             {"doubly_non_real", hc::Predicate::DoublyNonReal}};
      for (const auto& [name, pred] : which) {
        const auto r = hc::predicate(model, pred, trials, g.seed);
        ordered_json row{{"predicate", name}, {"holds", r.holds}, {"proven", r.proven}, {"trials", r.trials_run}};
        if (r.witness) {
          row["witness_indices"] = r.witness->indices;
          row["witness_value"] = {r.witness->value.real(), r.witness->value.imag()};
        }
        if (g.json) {
          out.push_back(row);
        } else {
          std::cout << name << ": " << (r.holds ? "true" : "false");
          if (r.witness && pred != hc::Predicate::SelfTranspose) {
            const auto& idx = r.witness->indices;
            std::cout << ", witness g[" << idx[0] << "," << idx[1] << "]";
            if (pred == hc::Predicate::DoublyNonReal) std::cout << " conj(g[" << idx[2] << "," << idx[3] << "])";
            std::cout << " = " << format_complex(r.witness->value);
          } else if (r.proven) {
            std::cout << " (structural)";
          } else {
            std::cout << " (" << r.trials_run << " samples, no witness)";
          }
          std::cout << "\n";
        }
      }
      if (g.json) std::cout << out.dump() << "\n";
      return 0;
    }
  } catch (const hc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const hc::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const hc::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
