// hypersurf command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypersurf/hypersurf.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitFailure = 3;

struct Flags {
  std::string poly;
  std::string corpus;
  std::size_t dim = 0;
  std::string vars = "auto";
  std::uint64_t seed = 0;
  int samples = 200;
  double tol = 1e-6;
  double radius = 10.0;
  std::string sign = "auto";
  std::string sphere;
  std::size_t block_start = 0;
  std::string c;
  bool all = false;
  bool verbose = false;
};

int exit_code(hs_status s) {
  switch (s) {
    case HS_OK: return kExitOk;
    case HS_ERR_PARSE:
    case HS_ERR_INPUT:
    case HS_ERR_NOT_FOUND: return kExitInput;
    default: return kExitFailure;
  }
}

int report_error(hs_status s) {
  std::cerr << "hypersurf: error: " << hs_last_error() << "\n";
  return exit_code(s);
}

struct PolyDeleter {
  void operator()(hs_polynomial* p) const { hs_polynomial_free(p); }
};
using PolyHandle = std::unique_ptr<hs_polynomial, PolyDeleter>;

hs_status load(const Flags& f, PolyHandle& out) {
  hs_polynomial* raw = nullptr;
  hs_status s;
  if (!f.corpus.empty()) {
    s = hs_polynomial_from_corpus(f.corpus.c_str(), &raw);
  } else {
    hs_var_mode mode = HS_VARS_AUTO;
    if (f.vars == "named") mode = HS_VARS_NAMED;
    if (f.vars == "indexed") mode = HS_VARS_INDEXED;
    s = hs_polynomial_parse(f.poly.c_str(), f.dim, mode, &raw);
  }
  out.reset(raw);
  return s;
}

void summarize(const std::string& command, const std::string& text) {
  const auto j = nlohmann::ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) return;
  std::cerr << "command: " << command << "\n";
  if (j.contains("input")) std::cerr << "polynomial: " << j["input"]["canonical"].get<std::string>() << "\n";
  auto show = [&](const char* label, const nlohmann::ordered_json& v) {
    if (!v.is_null()) std::cerr << label << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  };
  if (j.contains("curvature")) {
    show("cmc verdict", j["curvature"]["verdict"]);
    show("c", j["curvature"]["c_exact"].is_null() ? j["curvature"]["c_estimate"] : j["curvature"]["c_exact"]);
  }
  if (j.contains("quadric") && !j["quadric"].is_null()) show("quadric", j["quadric"]["kind"]);
  if (j.contains("leading_form")) show("leading form", j["leading_form"]["kind"]);
  if (j.contains("divisible")) show("divisible", j["divisible"]);
  if (j.contains("quotient")) show("quotient", j["quotient"]);
  if (j.contains("result")) show("ball", j["result"]["outcome"]);
  if (j.contains("expectations_met")) show("expectations met", j["expectations_met"]);
}

int run(const std::string& command, const Flags& f) {
  hs_options opts;
  hs_options_init(&opts);
  opts.seed = f.seed;
  opts.samples = f.samples;
  opts.tolerance = f.tol;
  opts.radius = f.radius;
  opts.ball_sign = f.sign == "positive" ? 1 : f.sign == "negative" ? -1 : 0;
  opts.target_c = f.c.empty() ? nullptr : f.c.c_str();

  char* json = nullptr;
  hs_status s = HS_OK;
  if (command == "corpus") {
    if (f.all) {
      s = hs_corpus_run(nullptr, &opts, &json);
    } else if (!f.corpus.empty()) {
      s = hs_corpus_run(f.corpus.c_str(), &opts, &json);
    } else {
      s = hs_corpus_list(&json);
    }
  } else {
    if (f.poly.empty() == f.corpus.empty()) {
      std::cerr << "hypersurf: error: exactly one of --poly or --corpus is required\n";
      return kExitInput;
    }
    PolyHandle p;
    s = load(f, p);
    if (s != HS_OK) {
      if (s == HS_ERR_PARSE && hs_last_error_position() >= 0) {
        std::cerr << "hypersurf: " << f.poly << "\n"
                  << "hypersurf: " << std::string(static_cast<std::size_t>(hs_last_error_position()), ' ') << "^\n";
      }
      return report_error(s);
    }
    if (command == "analyze") s = hs_analyze(p.get(), &opts, &json);
    else if (command == "classify") s = hs_classify(p.get(), &opts, &json);
    else if (command == "cmc") s = hs_cmc(p.get(), &opts, &json);
    else if (command == "decompose") s = hs_decompose(p.get(), &json);
    else if (command == "ball") s = hs_ball(p.get(), &opts, &json);
    else if (command == "divide") {
      if (f.sphere.empty()) {
        std::cerr << "hypersurf: error: divide needs --sphere\n";
        return kExitInput;
      }
      s = hs_divide(p.get(), f.sphere.c_str(), f.block_start, &json);
    }
  }
  if (s != HS_OK) return report_error(s);

  const std::string text = json;
  hs_string_free(json);
  std::fwrite(text.data(), 1, text.size(), stdout);
  std::fflush(stdout);
  if (f.verbose) summarize(command, text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyze algebraic hypersurfaces P = 0: mean curvature, CMC tests, quadric classification."};
  app.set_version_flag("--version", std::string(hs_version()));
  app.require_subcommand(1);

  Flags f;
  auto add_input = [&](CLI::App* sub) {
    auto* poly = sub->add_option("--poly", f.poly, "polynomial text, e.g. \"1-x^2-y^2-z^2\"");
    auto* corpus = sub->add_option("--corpus", f.corpus, "built-in corpus entry name");
    poly->excludes(corpus);
    sub->add_option("--dim", f.dim, "ambient dimension (default: inferred)");
    sub->add_option("--vars", f.vars, "variable naming")->check(CLI::IsMember({"auto", "named", "indexed"}));
  };
  auto add_analysis = [&](CLI::App* sub) {
    sub->add_option("--seed", f.seed, "random seed")->capture_default_str();
    sub->add_option("--samples", f.samples, "number of variety samples")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--tol", f.tol, "CMC tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  };

  const char* commands[][2] = {
      {"analyze", "full report"},
      {"classify", "classify a quadric"},
      {"cmc", "test for constant mean curvature"},
      {"decompose", "homogeneous parts"},
      {"divide", "divide by a sphere quadric"},
      {"ball", "find a ball where P has strict sign"},
      {"corpus", "list or run the built-in corpus"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_flag("--verbose", f.verbose, "human-readable summary on stderr");
    const std::string n = name;
    if (n == "corpus") {
      sub->add_option("--corpus", f.corpus, "entry to run (omit to list)");
      sub->add_flag("--all", f.all, "run every entry");
      add_analysis(sub);
      continue;
    }
    add_input(sub);
    if (n != "decompose" && n != "divide") add_analysis(sub);
    if (n == "cmc") sub->add_option("--c", f.c, "rational CMC target to certify");
    if (n == "ball") {
      sub->add_option("--radius", f.radius, "ball radius")->capture_default_str()->check(CLI::PositiveNumber);
      sub->add_option("--sign", f.sign, "required sign")->check(CLI::IsMember({"auto", "positive", "negative"}));
    }
    if (n == "divide") {
      sub->add_option("--sphere", f.sphere, "sphere quadric \"k,(a1,...,ak+1),r2\"")->required();
      sub->add_option("--block-start", f.block_start, "first coordinate index of the sphere block");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  return run(app.get_subcommands().front()->get_name(), f);
}
