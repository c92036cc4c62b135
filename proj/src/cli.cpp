#include "wca/cli.hpp"

#include "wca/anick.hpp"
#include "wca/cohomology.hpp"
#include "wca/modules.hpp"
#include "wca/reproduction.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wca {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string format = "text";
  std::string out_file;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", c.out_file, "Write output to FILE instead of stdout");
}

// Emits either the JSON document or the text rendering.
void emit(const Common& c, const Json& doc, const std::string& text, std::ostream& out) {
  std::string body = c.format == "json" ? doc.dump(2) + "\n" : text;
  if (c.out_file.empty()) {
    out << body;
    return;
  }
  std::ofstream f(c.out_file, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + c.out_file + "'");
  f << body;
}

Json algebra_json(const AlgebraElement& x) {
  Json terms = Json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    terms.push_back({{"word", to_string(w)}, {"coefficient", to_string(c)}});
  }
  return terms;
}

template <class Basis>
Json combination_json(const FreeCombination<Basis>& x, const char* key) {
  Json terms = Json::array();
  for (const auto& [b, c] : x.terms()) terms.push_back({{key, to_string(b)}, {"coefficient", to_string(c)}});
  return terms;
}

std::string line(const std::string& s) { return s + "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anick resolution and Hochschild cohomology of the Weyl conformal algebra U(2)", "wca"};
  app.require_subcommand(1);

  Common common;

  std::string nf_word, nf_order = "fast";
  std::uint64_t nf_seed = 1;
  auto* nf = app.add_subcommand("nf", "Normal form of a word in the coefficient algebra");
  nf->add_option("word", nf_word, "Word such as \"v(2)v(3)v(1)\"")->required();
  nf->add_option("--order", nf_order, "Rewriting order")->check(CLI::IsMember({"fast", "leftmost", "rightmost", "random"}));
  nf->add_option("--seed", nf_seed, "Seed for the random order");
  add_common(nf, common);

  int ch_degree = 1, ch_max_sum = 0;
  auto* chains = app.add_subcommand("chains", "Enumerate Anick chains by degree and index sum");
  chains->add_option("--degree", ch_degree, "Number of indices")->required()->check(CLI::NonNegativeNumber);
  chains->add_option("--max-sum", ch_max_sum, "Maximal index sum")->required()->check(CLI::NonNegativeNumber);
  add_common(chains, common);

  std::string de_chain, de_method = "morse";
  auto* delta = app.add_subcommand("delta", "Anick differential of a chain");
  delta->add_option("chain", de_chain, "Chain such as \"[2|1|0]\"")->required();
  delta->add_option("--method", de_method, "Computation route")->check(CLI::IsMember({"morse", "closed"}));
  add_common(delta, common);

  std::string ho_input, ho_map = "g";
  auto* homotopy = app.add_subcommand("homotopy", "Homotopy maps between the bar and Anick complexes");
  homotopy->add_option("input", ho_input, "Chain for g/transfer, bar cell for f")->required();
  homotopy->add_option("--map", ho_map, "g: chain -> bar; f: bar cell -> chains; transfer: f(∂ g(x))")
      ->check(CLI::IsMember({"g", "f", "transfer"}));
  add_common(homotopy, common);

  std::string ck_suite;
  CheckOptions ck_opts;
  auto* check = app.add_subcommand("check", "Run a property-check suite");
  check->add_option("--suite", ck_suite, "Suite name")->required()->check(CLI::IsMember(check_suites()));
  check->add_option("--max-degree", ck_opts.max_degree, "Degree bound (v-degree for conformal-axioms)")
      ->check(CLI::NonNegativeNumber);
  check->add_option("--max-sum", ck_opts.max_sum, "Index-sum bound or window")->check(CLI::NonNegativeNumber);
  check->add_option("--samples", ck_opts.samples, "Random samples")->check(CLI::NonNegativeNumber);
  check->add_option("--seed", ck_opts.seed, "Random seed");
  add_common(check, common);

  int co_degree = 1;
  std::string co_module;
  Window co_window{10, 3};
  bool co_constructions = false;
  auto* coh = app.add_subcommand("cohomology", "Windowed cohomology dimension");
  coh->add_option("--degree", co_degree, "Cohomological degree n >= 1")->required()->check(CLI::PositiveNumber);
  coh->add_option("--module", co_module, "M(alpha=..,delta=..), trivial, ext(alpha=..,beta=..,gamma=..)")->required();
  coh->add_option("--window", co_window.W, "Maximal chain index sum W")->check(CLI::NonNegativeNumber);
  coh->add_option("--margin", co_window.margin, "Inner-window margin")->check(CLI::NonNegativeNumber);
  coh->add_flag("--constructions", co_constructions, "Also verify the explicit preimage constructions");
  add_common(coh, common);

  std::vector<int> ve_criteria;
  bool ve_timings = false;
  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_option("--criteria", ve_criteria, "Subset of criteria (default: all)")
      ->delimiter(',')
      ->check(CLI::Range(1, kCriteriaCount));
  verify->add_flag("--timings", ve_timings, "Include wall-clock timings (output is then not reproducible)");
  add_common(verify, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*nf) {
      const RawWord w = parse_word(nf_word);
      AlgebraElement x;
      if (nf_order == "fast") x = normal_form(w);
      else if (nf_order == "leftmost") x = normal_form(w, RewriteOrder::Leftmost, nf_seed);
      else if (nf_order == "rightmost") x = normal_form(w, RewriteOrder::Rightmost, nf_seed);
      else x = normal_form(w, RewriteOrder::Random, nf_seed);
      Json doc{{"input", to_string(w)}, {"normal_form", to_string(x)}, {"terms", algebra_json(x)}};
      emit(common, doc, line(to_string(x)), out);
      return 0;
    }
    if (*chains) {
      const std::vector<AnickChain> list = window_chains(ch_degree, ch_max_sum);
      Json arr = Json::array();
      std::string text;
      for (const auto& x : list) {
        arr.push_back(to_string(x));
        text += line(to_string(x));
      }
      Json doc{{"degree", ch_degree}, {"max_sum", ch_max_sum}, {"count", list.size()}, {"chains", arr}};
      emit(common, doc, text, out);
      return 0;
    }
    if (*delta) {
      const AnickChain x = parse_chain(de_chain);
      if (x.degree() == 0) throw std::invalid_argument("delta needs a chain with at least one index");
      const ChainCombination d = de_method == "morse" ? anick_delta_morse(x) : anick_delta_closed(x);
      Json doc{{"chain", to_string(x)},
               {"method", de_method},
               {"result", to_string(d)},
               {"terms", combination_json(d, "chain")}};
      emit(common, doc, line(to_string(d)), out);
      return 0;
    }
    if (*homotopy) {
      Json doc{{"map", ho_map}, {"input", ""}};
      std::string rendered;
      Json terms;
      if (ho_map == "f") {
        const BarCell c = parse_cell(ho_input);
        const ChainCombination r = homotopy_f(c);
        doc["input"] = to_string(c);
        rendered = to_string(r);
        terms = combination_json(r, "chain");
      } else {
        const AnickChain x = parse_chain(ho_input);
        doc["input"] = to_string(x);
        if (ho_map == "g") {
          const BarCombination r = homotopy_g(x);
          rendered = to_string(r);
          terms = combination_json(r, "cell");
        } else {
          const ChainCombination r = u2_resolution().derivation_transfer(x);
          rendered = to_string(r);
          terms = combination_json(r, "chain");
        }
      }
      doc["result"] = rendered;
      doc["terms"] = terms;
      emit(common, doc, line(rendered), out);
      return 0;
    }
    if (*check) {
      const CheckReport r = run_check(ck_suite, ck_opts);
      Json doc{{"suite", r.suite},
               {"max_degree", ck_opts.max_degree},
               {"max_sum", ck_opts.max_sum},
               {"samples", ck_opts.samples},
               {"seed", ck_opts.seed},
               {"cases", r.cases},
               {"failures", r.failures},
               {"passed", r.passed()},
               {"failure_examples", r.examples}};
      std::ostringstream text;
      text << r.suite << ": " << (r.cases - r.failures) << "/" << r.cases << " cases passed"
           << (r.passed() ? "" : " (FAILED)") << "\n";
      for (const auto& e : r.examples) text << "  " << e << "\n";
      emit(common, doc, text.str(), out);
      return r.passed() ? 0 : 1;
    }
    if (*coh) {
      co_window.validate();
      const FiniteModule M = make_module(parse_module_spec(co_module));
      const CohomologyReport r = cohomology_dim(co_degree, M, co_window);
      Json counts = Json::object();
      for (const auto& [deg, n] : r.chain_counts) counts[std::to_string(deg)] = n;
      Json doc{{"degree", r.degree},       {"module", r.module},           {"W", r.W},
               {"margin", r.margin},       {"dim_ker_proj", r.dim_ker_proj}, {"dim_im_proj", r.dim_im_proj},
               {"dim_H", r.dim_H},         {"stable", r.stable},           {"chain_counts", counts}};
      std::ostringstream text;
      text << "H^" << r.degree << "(U(2), " << r.module << ") on window W=" << r.W << ", margin=" << r.margin << "\n"
           << "  dim_ker_proj = " << r.dim_ker_proj << "\n"
           << "  dim_im_proj  = " << r.dim_im_proj << "\n"
           << "  dim_H        = " << r.dim_H << "\n"
           << "  stable       = " << (r.stable ? "true" : "false") << "\n";
      for (const auto& [deg, n] : r.chain_counts) text << "  chains of degree " << deg << ": " << n << "\n";
      int code = 0;
      if (co_constructions) {
        const ConstructionResult c = verify_theorem_constructions(M, co_degree, co_window);
        doc["constructions"] = {{"ok", c.ok}, {"cocycles_checked", c.cocycles_checked}, {"detail", c.detail}};
        if (c.failing_chain) doc["constructions"]["failing_chain"] = to_string(*c.failing_chain);
        text << "  constructions: " << (c.ok ? "ok" : "FAILED " + c.detail) << " (" << c.cocycles_checked
             << " cocycles)\n";
        code = c.ok ? 0 : 1;
      }
      emit(common, doc, text.str(), out);
      return code;
    }
    if (*verify) {
      std::vector<int> ids = ve_criteria;
      if (ids.empty())
        for (int i = 1; i <= kCriteriaCount; ++i) ids.push_back(i);
      Json rows = Json::array();
      std::ostringstream text;
      bool all = true;
      for (int id : ids) {
        const CriterionResult r = run_criterion(id);
        all = all && r.passed;
        Json row{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}};
        if (ve_timings) row["seconds"] = r.seconds;
        rows.push_back(row);
        text << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.title;
        if (ve_timings) text << "  (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
        text << "\n      " << r.detail << "\n";
      }
      text << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
      emit(common, Json{{"passed", all}, {"criteria", rows}}, text.str(), out);
      return all ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace wca
