#include "etaforge/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "etaforge/eta_engine.hpp"
#include "etaforge/json_io.hpp"
#include "etaforge/verify.hpp"
#include "etaforge/weyl_d.hpp"

namespace etaforge {

namespace {

using nlohmann::json;

struct CliConfig {
  int m = 3;
  int ky = -1;  // -1: follow k
  int k = -1;
  std::string format = "text";
  long long budget = 10'000'000;
  unsigned long long seed = 0;
  std::string out_path;
};

std::vector<int> parse_word_arg(const std::string& text) {
  std::vector<int> word;
  std::string norm = text;
  bool has_sep = norm.find(' ') != std::string::npos || norm.find(',') != std::string::npos;
  if (!has_sep) {
    for (char c : norm) {
      if (c < '0' || c > '9') fail(ErrorCode::ParseError, "bad word letter");
      word.push_back(c - '0');
    }
    return word;
  }
  for (char& c : norm)
    if (c == ',') c = ' ';
  std::stringstream ss(norm);
  int v;
  while (ss >> v) {
    if (v < 0) fail(ErrorCode::ParseError, "word letters must be nonnegative");
    word.push_back(v);
  }
  return word;
}

std::string word_string(const std::vector<int>& word) {
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word[i]);
  }
  return out;
}

// Shape plus k, with the type field tolerated and ignored.
std::pair<Partition, int> parse_shape_k(const std::string& text, int default_k) {
  std::string head = text;
  int k = default_k;
  std::stringstream ss(text);
  std::string field;
  bool first = true;
  while (std::getline(ss, field, ':')) {
    if (first) {
      head = field;
      first = false;
      continue;
    }
    if (field.rfind("k=", 0) == 0) k = std::stoi(field.substr(2));
  }
  if (k <= 0) fail(ErrorCode::ParseError, "no k given (use ':k=...' or --k)");
  Partition shape = parse_partition(head);
  return {shape, k};
}

struct Emitter {
  const CliConfig& cfg;
  std::ostream& out;
  void operator()(const std::string& text, const json& j) const {
    if (cfg.format == "json") out << j.dump(2) << '\n';
    else out << text;
    if (!cfg.out_path.empty()) {
      std::ofstream f(cfg.out_path);
      f << j.dump(2) << '\n';
    }
  }
};

int resolve_ky(const CliConfig& cfg, int k) { return cfg.ky >= 0 ? cfg.ky : k; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"eta polynomials, theta polynomials and type D Schubert calculus"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  if (const char* env = std::getenv("ETA_FORGE_BUDGET")) cfg.budget = std::atoll(env);
  app.add_option("--m", cfg.m, "number of x variables")->capture_default_str();
  app.add_option("--ky", cfg.ky, "number of y variables (default: k)");
  app.add_option("--k", cfg.k, "default k for partition literals");
  app.add_option("--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", cfg.budget, "expansion visit budget");
  app.add_option("--seed", cfg.seed, "seed for randomized spot checks");
  app.add_option("--out", cfg.out_path, "also write JSON to this path");

  std::string lambda_arg, mu_arg, w_arg, word_arg, suite_arg, variant = "etaeq";
  int p_arg = 1, n_arg = 3, max_entry = 2, max_unmarked = 2;
  bool schur_p_flag = false;
  VerifyOptions vopts;

  auto* c_eta = app.add_subcommand("eta", "eta polynomial of a typed partition")->fallthrough();
  c_eta->add_option("--lambda", lambda_arg)->required();
  c_eta->add_option("--variant", variant)
      ->check(CLI::IsMember({"etaeq", "star", "tableaux"}));

  auto* c_theta = app.add_subcommand("theta", "theta polynomial of a k-strict partition")->fallthrough();
  c_theta->add_option("--lambda", lambda_arg)->required();
  c_theta->add_flag("--hat", schur_p_flag, "use the valid-pair operator instead");

  auto* c_schurq = app.add_subcommand("schurq", "Schur Q (or P) polynomial")->fallthrough();
  c_schurq->add_option("--lambda", lambda_arg)->required();
  c_schurq->add_flag("--p", schur_p_flag, "divide by 2^length");

  auto* c_schurs = app.add_subcommand("schurs", "Schur s_{mu'}(y)")->fallthrough();
  c_schurs->add_option("--mu", mu_arg)->required();

  auto* c_pieri = app.add_subcommand("pieri", "Pieri steps of w_p * W_lambda")->fallthrough();
  c_pieri->add_option("--lambda", lambda_arg)->required();
  c_pieri->add_option("--p", p_arg)->required();

  auto* c_strip = app.add_subcommand("strip", "k'-strip test and statistics")->fallthrough();
  c_strip->add_option("--lambda", lambda_arg)->required();
  c_strip->add_option("--mu", mu_arg)->required();

  auto* c_tab = app.add_subcommand("tableaux", "typed tableaux on lambda/mu")->fallthrough();
  c_tab->add_option("--lambda", lambda_arg)->required();
  c_tab->add_option("--mu", mu_arg)->required();
  c_tab->add_option("--max-entry", max_entry);

  auto* c_bitab = app.add_subcommand("bitableaux", "typed bitableaux of shape lambda")->fallthrough();
  c_bitab->add_option("--lambda", lambda_arg)->required();
  c_bitab->add_option("--max-unmarked", max_unmarked);

  auto* c_std = app.add_subcommand("standard", "standard typed tableaux on lambda/mu")->fallthrough();
  c_std->add_option("--lambda", lambda_arg)->required();
  c_std->add_option("--mu", mu_arg)->required();

  auto* c_eskew = app.add_subcommand("eskew", "skew function E_{lambda/mu}")->fallthrough();
  c_eskew->add_option("--lambda", lambda_arg)->required();
  c_eskew->add_option("--mu", mu_arg)->required();

  auto* c_stanley = app.add_subcommand("stanley", "type D Stanley symmetric function")->fallthrough();
  c_stanley->add_option("--w", w_arg)->required();

  auto* c_schubert = app.add_subcommand("schubert", "Billey-Haiman Schubert polynomial")->fallthrough();
  c_schubert->add_option("--w", w_arg)->required();
  c_schubert->add_option("--n", n_arg)->required();

  auto* c_grass = app.add_subcommand("grassmannian", "w_lambda in W_{n+1}")->fallthrough();
  c_grass->add_option("--lambda", lambda_arg)->required();
  c_grass->add_option("--n", n_arg)->required();

  auto* c_words = app.add_subcommand("words", "reduced words of a signed permutation")->fallthrough();
  c_words->add_option("--w", w_arg)->required();
  c_words->add_option("--n", n_arg);

  auto* c_skew = app.add_subcommand("skew-find", "first skew decomposition of w")->fallthrough();
  c_skew->add_option("--w", w_arg)->required();
  c_skew->add_option("--n", n_arg)->required();

  auto* c_bij = app.add_subcommand("bijection", "word to tableau and back")->fallthrough();
  c_bij->add_option("--word", word_arg)->required();
  c_bij->add_option("--lambda", lambda_arg)->required();
  c_bij->add_option("--mu", mu_arg)->required();

  auto* c_iota = app.add_subcommand("iota", "swap the letters 0 and 1")->fallthrough();
  c_iota->add_option("--word", word_arg)->required();

  auto* c_verify = app.add_subcommand("verify", "run a verification suite")->fallthrough();
  c_verify->add_option("suite", suite_arg, "suite name or 'all'")->required();
  c_verify->add_option("--max-size", vopts.max_size);
  c_verify->add_option("--max-k", vopts.max_k);
  c_verify->add_option("--suite-m", vopts.m);
  c_verify->add_option("--n", vopts.n);
  c_verify->add_option("--max-p", vopts.max_p);
  c_verify->add_option("--max-length", vopts.max_length);

  std::vector<std::string> argv(args);
  try {
    std::vector<const char*> cargv;
    cargv.push_back("etaforge");
    for (const auto& a : argv) cargv.push_back(a.c_str());
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    auto subs = app.get_subcommands();
    if (!subs.empty()) err << subs.front()->help();
    return 2;
  }

  Emitter emit{cfg, out};
  Budget budget{cfg.budget};

  auto typed_arg = [&](const std::string& text) {
    std::optional<int> dk = cfg.k > 0 ? std::optional<int>(cfg.k) : std::nullopt;
    return parse_typed_partition(text, dk);
  };

  try {
    if (*c_eta) {
      TypedPartition la = typed_arg(lambda_arg);
      int ky = resolve_ky(cfg, la.k);
      Workspace ws(cfg.m, ky);
      ws.set_budget(budget);
      SparsePoly h = variant == "star"       ? eta_via_star(la, ws)
                     : variant == "tableaux" ? eta_via_tableaux(la, ws)
                                             : eta_poly(la, ws);
      emit("eta[" + typed_partition_literal(la) + "] = " + h.pretty() + "\n",
           poly_to_json(h));
    } else if (*c_theta) {
      auto [shape, k] = parse_shape_k(lambda_arg, cfg.k);
      Workspace ws(cfg.m, resolve_ky(cfg, k));
      ws.set_budget(budget);
      SparsePoly t = schur_p_flag ? theta_hat_poly(shape, k, ws) : theta_poly(shape, k, ws);
      emit("theta[" + partition_literal(shape) + ":k=" + std::to_string(k) +
               "] = " + t.pretty() + "\n",
           poly_to_json(t));
    } else if (*c_schurq) {
      auto [shape, k] = parse_shape_k(lambda_arg, cfg.k > 0 ? cfg.k : 1);
      (void)k;
      Workspace ws(cfg.m, 0);
      ws.set_budget(budget);
      SparsePoly q = schur_p_flag ? ws.schur_p(shape) : ws.schur_q(shape);
      emit((schur_p_flag ? "P[" : "Q[") + partition_literal(shape) + "] = " + q.pretty() +
               "\n",
           poly_to_json(q));
    } else if (*c_schurs) {
      Partition mu = parse_partition(mu_arg);
      int ky = cfg.ky >= 0 ? cfg.ky : (cfg.k > 0 ? cfg.k : mu.part(1));
      SparsePoly s = ssyt_sum(mu.conjugate(), ky, 0, ky);
      emit("s[conjugate of " + partition_literal(mu) + "] = " + s.pretty() + "\n",
           poly_to_json(s));
    } else if (*c_pieri) {
      auto [shape, k] = parse_shape_k(lambda_arg, cfg.k);
      auto steps = pieri_steps(shape, p_arg, k);
      std::ostringstream text;
      for (const auto& s : steps)
        text << partition_literal(s.target) << "  N=" << s.n_comp << "  M=" << s.exponent
             << '\n';
      emit(text.str(), pieri_steps_to_json(steps));
    } else if (*c_strip) {
      TypedPartition la = typed_arg(lambda_arg);
      TypedPartition mu = parse_typed_partition(mu_arg, la.k);
      bool strip = is_kprime_strip(la.shape, mu.shape, la.k);
      json j{{"is_strip", strip}};
      std::ostringstream text;
      if (!strip) {
        text << "not a k'-horizontal strip\n";
      } else {
        StripStats st = strip_stats(la, mu);
        j["m"] = st.m_stat;
        j["n_hat"] = st.n_hat;
        j["typed_strip"] = st.is_typed_strip;
        text << "k'-horizontal strip: m=" << st.m_stat << " n_hat=" << st.n_hat;
        if (st.is_typed_strip) {
          j["n"] = st.n_typed;
          text << " n=" << st.n_typed;
        } else {
          text << " (not a typed strip: types sum to 3)";
        }
        auto na = strip_na_direct(la.shape, mu.shape, la.k);
        int expected =
            st.n_hat + ((la.shape.has_part(la.k) && !mu.shape.has_part(la.k)) ? 0 : 1);
        j["n_components_direct"] = na ? json(*na) : json();
        if (na && *na != expected)
          text << "\nwarning: direct component count " << *na << " differs from "
               << expected << " (row-zero tail convention)";
        text << '\n';
      }
      emit(text.str(), j);
    } else if (*c_tab) {
      TypedPartition la = typed_arg(lambda_arg);
      TypedPartition mu = parse_typed_partition(mu_arg, la.k);
      auto tabs = enumerate_typed_tableaux(la, mu, max_entry);
      std::ostringstream text;
      text << tabs.size() << " typed tableaux\n";
      json arr = json::array();
      for (const auto& t : tabs) {
        text << "n=" << t.n_stat() << "\n" << render_tableau(t);
        arr.push_back(tableau_to_json(t));
      }
      emit(text.str(), arr);
    } else if (*c_bitab) {
      TypedPartition la = typed_arg(lambda_arg);
      auto us = enumerate_bitableaux(la, max_unmarked);
      std::ostringstream text;
      text << us.size() << " typed bitableaux\n";
      json arr = json::array();
      for (const auto& u : us) {
        text << "n=" << u.n_stat() << "\n" << render_bitableau(u);
        arr.push_back(bitableau_to_json(u));
      }
      emit(text.str(), arr);
    } else if (*c_std) {
      TypedPartition la = typed_arg(lambda_arg);
      TypedPartition mu = parse_typed_partition(mu_arg, la.k);
      auto tabs = enumerate_standard(la, mu);
      std::ostringstream text;
      text << tabs.size() << " standard typed tableaux\n";
      json arr = json::array();
      for (const auto& t : tabs) {
        text << render_tableau(t);
        arr.push_back(tableau_to_json(t));
      }
      emit(text.str(), arr);
    } else if (*c_eskew) {
      TypedPartition la = typed_arg(lambda_arg);
      TypedPartition mu = parse_typed_partition(mu_arg, la.k);
      Workspace ws(cfg.m, resolve_ky(cfg, la.k));
      SparsePoly e = e_skew(la, mu, ws);
      emit("E[" + typed_partition_literal(la) + " / " + typed_partition_literal(mu) +
               "] = " + e.pretty() + "\n",
           poly_to_json(e));
    } else if (*c_stanley) {
      SignedPermutation w = SignedPermutation::parse(w_arg);
      SparsePoly e = stanley_e(w, cfg.m, budget);
      emit("E[" + w.to_string() + "] = " + e.pretty() + "\n", poly_to_json(e));
    } else if (*c_schubert) {
      SignedPermutation w = SignedPermutation::parse(w_arg).extended(n_arg + 1);
      SparsePoly d = schubert_ds(w, n_arg, cfg.m, budget);
      emit("DS[" + w.to_string() + "] = " + d.pretty() + "\n", poly_to_json(d));
    } else if (*c_grass) {
      TypedPartition la = typed_arg(lambda_arg);
      SignedPermutation w = grassmannian_element(la, n_arg);
      emit(w.to_string() + "\n", json{{"w", w.to_string()}});
    } else if (*c_words) {
      SignedPermutation w = SignedPermutation::parse(w_arg);
      if (c_words->count("--n")) w = w.extended(n_arg + 1);
      auto words = reduced_words(w);
      std::ostringstream text;
      text << words.size() << " reduced words\n";
      json arr = json::array();
      for (const auto& word : words) {
        text << word_string(word) << '\n';
        arr.push_back(word_string(word));
      }
      emit(text.str(), arr);
    } else if (*c_skew) {
      SignedPermutation w = SignedPermutation::parse(w_arg).extended(n_arg + 1);
      auto witness = is_skew(w, n_arg);
      if (!witness) {
        emit("not skew\n", json{{"skew", false}});
      } else {
        std::ostringstream text;
        text << "skew: k=" << witness->k << " lambda=" << typed_partition_literal(witness->la)
             << " mu=" << typed_partition_literal(witness->mu) << '\n';
        emit(text.str(), json{{"skew", true},
                              {"k", witness->k},
                              {"lambda", typed_partition_literal(witness->la)},
                              {"mu", typed_partition_literal(witness->mu)}});
      }
    } else if (*c_bij) {
      TypedPartition la = typed_arg(lambda_arg);
      TypedPartition mu = parse_typed_partition(mu_arg, la.k);
      auto word = parse_word_arg(word_arg);
      TypedTableau t = word_to_tableau(word, la, mu);
      auto back = tableau_to_word(t);
      hard_assert(back == word, "bijection roundtrip failed");
      emit(render_tableau(t), tableau_to_json(t));
    } else if (*c_iota) {
      auto word = iota(parse_word_arg(word_arg));
      emit(word_string(word) + "\n", json(word_string(word)));
    } else if (*c_verify) {
      vopts.seed = cfg.seed;
      vopts.budget = budget;
      std::vector<std::string> names;
      if (suite_arg == "all") names = verify_suite_names();
      else names.push_back(suite_arg);
      bool all_ok = true;
      for (const auto& name : names) {
        SuiteResult res = verify_suite(name, vopts);
        all_ok = all_ok && res.ok();
        out << (res.ok() ? "ok   " : "FAIL ") << res.name << " (" << res.cases
            << " checks)" << '\n';
        for (const auto& f : res.failures) out << "     failure: " << f << '\n';
        for (const auto& w : res.warnings) out << "     warning: " << w << '\n';
      }
      return all_ok ? 0 : 3;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace etaforge
