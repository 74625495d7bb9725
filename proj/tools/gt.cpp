// Command-line front end. All engine work goes through the C API in
// gtsetlin.h; this file only parses arguments, assembles the request
// document, and renders the response.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gtsetlin.h"

using json = nlohmann::json;

namespace {

// Inputs may be inline JSON or a path to a JSON file.
json load_input(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
    std::ifstream in(arg);
    if (!in) throw CLI::ValidationError("input", "cannot open file '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return json::parse(text);
}

struct CommonOpts {
  std::string relations, seed, tableau, vector_in, op, family, top_row, lambda;
  int radius = 2;
  int samples = 5;
  int anchor_assignments = 3;
  int n = 3;
  long long gap = 2;
  unsigned long long seed_rng = 0;
  long long limit = 500;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--radius", o.radius, "shift max-norm bound for basis balls");
  cmd->add_option("--samples", o.samples, "number of sampled realizations");
  cmd->add_option("--anchor-assignments", o.anchor_assignments,
                  "independent anchor value assignments");
  cmd->add_option("--format", o.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--seed-rng", o.seed_rng, "seed for sampled realizations");
}

int run_request(const json& req, const std::string& format) {
  char* response = nullptr;
  int exit_code = 2;
  gts_status st = gts_run(req.dump().c_str(), &response, &exit_code);
  if (st != GTS_OK || !response) {
    std::fprintf(stderr, "error: %s\n", gts_last_error());
    return 2;
  }
  json resp = json::parse(response);
  gts_string_free(response);
  if (format == "json") {
    std::cout << resp.dump(2) << "\n";
    return exit_code;
  }
  // Text rendering: one "key: value" line per top-level field, nested
  // structures as compact JSON.
  for (auto it = resp.begin(); it != resp.end(); ++it) {
    if (it.value().is_structured())
      std::cout << it.key() << ": " << it.value().dump() << "\n";
    else
      std::cout << it.key() << ": "
                << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                << "\n";
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Gelfand-Tsetlin module construction and verification"};
  app.require_subcommand(1);

  struct Verb {
    const char* name;
    const char* help;
    std::vector<const char*> inputs;  // which option groups the verb takes
  };
  const std::vector<Verb> verbs = {
      {"check-standard", "decide standardness of a tableau", {"tableau"}},
      {"check-noncritical", "decide noncriticality of a tableau or relation set",
       {"tableau?", "relations?"}},
      {"decompose", "split a relation set into indecomposable components", {"relations"}},
      {"reduce", "remove redundant relations", {"relations"}},
      {"check-admissible", "decide admissibility of a relation set", {"relations"}},
      {"sample-realization", "sample a realization with prescribed gaps", {"relations", "gap"}},
      {"enumerate-basis", "list basis members within a shift radius", {"relations", "seed"}},
      {"apply", "apply a generator or word to a vector",
       {"relations", "seed", "op", "vector?", "tableau?"}},
      {"verify-module", "check the defining relations on a basis ball", {"relations", "seed"}},
      {"gamma", "evaluate gamma values and optionally check the subalgebra action",
       {"tableau", "mk?", "relations?", "seed?"}},
      {"fingerprint", "eigenvalue fingerprint of a tableau", {"tableau"}},
      {"multiplicity", "pairwise-distinct fingerprints over a ball", {"relations", "seed"}},
      {"irreducible", "maximality of the relation set for the seed", {"relations", "seed"}},
      {"frz", "maximal admissible realized set for a tableau", {"tableau"}},
      {"gg-check", "module verdict for one continuation family", {"n", "family", "top"}},
      {"gg-sweep", "verdicts for all families over a top row", {"n", "top"}},
      {"rr-explore", "relation sets reachable by relation removal", {"n", "limit"}},
  };

  std::map<std::string, CommonOpts> opts;
  std::map<std::string, CLI::App*> cmds;
  int mk_m = 0, mk_k = 0;
  for (const Verb& v : verbs) {
    CLI::App* cmd = app.add_subcommand(v.name, v.help);
    CommonOpts& o = opts[v.name];
    add_common(cmd, o);
    for (const char* input : v.inputs) {
      std::string key = input;
      bool optional = key.back() == '?';
      if (optional) key.pop_back();
      if (key == "tableau") {
        auto* opt = cmd->add_option("--tableau", o.tableau, "tableau JSON or file");
        if (!optional) opt->required();
      } else if (key == "relations") {
        auto* opt = cmd->add_option("--relations", o.relations, "relation set JSON or file");
        if (!optional) opt->required();
      } else if (key == "seed") {
        auto* opt = cmd->add_option("--seed", o.seed, "seed tableau JSON or file");
        if (!optional) opt->required();
      } else if (key == "vector") {
        cmd->add_option("--vector", o.vector_in, "formal vector JSON or file");
      } else if (key == "op") {
        cmd->add_option("--op", o.op, "generator {\"i\":1,\"j\":3} or word [[i,j],...]")
            ->required();
      } else if (key == "gap") {
        cmd->add_option("--gap", o.gap, "minimal in-component entry gap");
      } else if (key == "n") {
        cmd->add_option("--n", o.n, "algebra height n")->required();
      } else if (key == "family") {
        cmd->add_option("--family", o.family, "index family [[i1,i1'],...]")->required();
      } else if (key == "top") {
        cmd->add_option("--top", o.top_row, "integral top row [l_n1,...]")->required();
      } else if (key == "limit") {
        cmd->add_option("--limit", o.limit, "maximum number of reachable sets");
      } else if (key == "mk") {
        cmd->add_option("--m", mk_m, "gamma row index m");
        cmd->add_option("--k", mk_k, "gamma power index k");
      }
    }
    cmds[v.name] = cmd;
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (const Verb& v : verbs) {
      if (!cmds[v.name]->parsed()) continue;
      const CommonOpts& o = opts[v.name];
      json req;
      req["verb"] = v.name;
      req["radius"] = o.radius;
      req["samples"] = o.samples;
      req["anchor_assignments"] = o.anchor_assignments;
      req["rng_seed"] = o.seed_rng;
      if (!o.relations.empty()) req["relations"] = load_input(o.relations);
      if (!o.seed.empty()) req["seed"] = load_input(o.seed);
      if (!o.tableau.empty()) req["tableau"] = load_input(o.tableau);
      if (!o.vector_in.empty()) req["vector"] = load_input(o.vector_in);
      if (!o.op.empty()) req["op"] = load_input(o.op);
      if (!o.family.empty()) req["family"] = load_input(o.family);
      if (!o.top_row.empty()) req["top_row"] = load_input(o.top_row);
      if (std::string(v.name) == "sample-realization") req["gap"] = o.gap;
      if (std::string(v.name) == "rr-explore" || std::string(v.name) == "gg-check" ||
          std::string(v.name) == "gg-sweep")
        req["n"] = o.n;
      if (std::string(v.name) == "rr-explore") req["limit"] = o.limit;
      if (std::string(v.name) == "gamma" && mk_m > 0) {
        req["m"] = mk_m;
        req["k"] = mk_k;
      }
      return run_request(req, o.format);
    }
  } catch (const json::exception& e) {
    std::fprintf(stderr, "error: ParseError: %s\n", e.what());
    return 2;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  }
  return 2;
}
