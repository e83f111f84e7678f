// Command-line front end; talks to the engine exclusively through the C API.

#include <kenso.h>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

struct ManifoldDeleter {
  void operator()(kenso_manifold* m) const { kenso_manifold_free(m); }
};
struct ResultDeleter {
  void operator()(kenso_result* r) const { kenso_result_free(r); }
};
using ManifoldPtr = std::unique_ptr<kenso_manifold, ManifoldDeleter>;
using ResultPtr = std::unique_ptr<kenso_result, ResultDeleter>;

struct CommonArgs {
  std::string builtin = "kenmotsu5";
  std::string file;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--builtin", args.builtin, "Built-in manifold name");
  cmd->add_option("--file", args.file, "Manifold definition file");
  cmd->add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
}

int die(const std::string& message, int code) {
  std::cerr << "kenso: " << message << "\n";
  return code;
}

int load_manifold(const CommonArgs& args, ManifoldPtr& out) {
  kenso_manifold* raw = nullptr;
  kenso_status status;
  if (!args.file.empty()) {
    std::ifstream in(args.file, std::ios::binary);
    if (!in) return die("cannot open '" + args.file + "'", 2);
    std::ostringstream text;
    text << in.rdbuf();
    status = kenso_manifold_from_source(text.str().c_str(), &raw);
  } else {
    status = kenso_manifold_from_builtin(args.builtin.c_str(), &raw);
  }
  if (status != KENSO_OK) return die(kenso_last_error(), 2);
  out.reset(raw);
  return 0;
}

int emit(const ResultPtr& result, const CommonArgs& args) {
  char* rendered = nullptr;
  kenso_format fmt = (args.format == "structured") ? KENSO_FORMAT_JSON : KENSO_FORMAT_TEXT;
  if (kenso_result_render(result.get(), fmt, &rendered) != KENSO_OK)
    return die(kenso_last_error(), 2);
  std::fputs(rendered, stdout);
  kenso_string_free(rendered);
  return kenso_result_passed(result.get()) ? 0 : 1;
}

int display_precision() {
  const char* env = std::getenv("KENSO_PRECISION");
  if (!env) return 0;
  int value = std::atoi(env);
  return value > 0 ? value : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact frame-based contact geometry: Kenmotsu verification, curvature tables, "
               "and Ricci-Yamabe-type soliton analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kenso_version()));

  CommonArgs check_args, curvature_args, soliton_args, classify_args, theorems_args, example_args;

  CLI::App* check = app.add_subcommand("check", "Verify the structure axioms and identities");
  add_common(check, check_args);

  CLI::App* curvature = app.add_subcommand("curvature", "Print bracket, connection, and curvature tables");
  add_common(curvature, curvature_args);

  CLI::App* soliton = app.add_subcommand("soliton", "Evaluate or fit a k-Ricci-Yamabe-type soliton");
  add_common(soliton, soliton_args);
  std::string s_alpha = "1", s_beta = "0", s_k = "1", s_lambda, s_vector = "xi", s_function;
  std::string s_mode = "exact", s_star = "true";
  soliton->add_option("--alpha", s_alpha, "Coefficient of the Ricci term");
  soliton->add_option("--beta", s_beta, "Coefficient of the scalar term");
  soliton->add_option("--k", s_k, "Coefficient of the Lie-derivative term");
  soliton->add_option("--lambda", s_lambda, "Soliton constant (exact mode)");
  soliton->add_option("--vector", s_vector, "Potential vector field");
  soliton->add_option("--function", s_function, "Gradient potential function");
  soliton->add_option("--mode", s_mode, "Residual mode")
      ->check(CLI::IsMember({"exact", "trace", "xi-trace"}));
  soliton->add_option("--star", s_star, "Use the star tensors")
      ->check(CLI::IsMember({"true", "false"}));

  CLI::App* classify = app.add_subcommand("classify-vector", "Torse-forming / conformal Killing classification");
  add_common(classify, classify_args);
  std::string c_vector = "xi";
  classify->add_option("--vector", c_vector, "Vector field to classify");

  CLI::App* theorems = app.add_subcommand("theorems", "Evaluate the soliton-constant identities");
  add_common(theorems, theorems_args);
  std::string t_alpha = "alpha", t_beta = "beta", t_k = "k", t_lambda, t_star = "true";
  theorems->add_option("--alpha", t_alpha, "Coefficient of the Ricci term");
  theorems->add_option("--beta", t_beta, "Coefficient of the scalar term");
  theorems->add_option("--k", t_k, "Coefficient of the Lie-derivative term");
  theorems->add_option("--lambda", t_lambda, "Soliton constant");
  theorems->add_option("--star", t_star, "Use the star tensors")
      ->check(CLI::IsMember({"true", "false"}));

  CLI::App* example = app.add_subcommand("example", "Print a built-in manifold definition");
  example->add_option("--builtin", example_args.builtin, "Built-in manifold name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (example->parsed()) {
    char* source = nullptr;
    if (kenso_builtin_source(example_args.builtin.c_str(), &source) != KENSO_OK)
      return die(kenso_last_error(), 2);
    std::fputs(source, stdout);
    kenso_string_free(source);
    return 0;
  }

  auto run = [&](const CommonArgs& args,
                 kenso_status (*fn)(const kenso_manifold*, kenso_result**)) {
    ManifoldPtr manifold;
    if (int rc = load_manifold(args, manifold)) return rc;
    kenso_result* raw = nullptr;
    if (fn(manifold.get(), &raw) != KENSO_OK) return die(kenso_last_error(), 2);
    return emit(ResultPtr(raw), args);
  };

  if (check->parsed()) return run(check_args, kenso_run_check);
  if (curvature->parsed()) return run(curvature_args, kenso_run_curvature);

  if (soliton->parsed()) {
    ManifoldPtr manifold;
    if (int rc = load_manifold(soliton_args, manifold)) return rc;
    kenso_soliton_opts opts{};
    opts.alpha = s_alpha.c_str();
    opts.beta = s_beta.c_str();
    opts.k = s_k.c_str();
    opts.lambda = s_lambda.empty() ? nullptr : s_lambda.c_str();
    opts.vector = s_vector.c_str();
    opts.function = s_function.empty() ? nullptr : s_function.c_str();
    opts.mode = s_mode == "trace"      ? KENSO_MODE_TRACE
                : s_mode == "xi-trace" ? KENSO_MODE_XI_TRACE
                                       : KENSO_MODE_EXACT;
    opts.star = (s_star == "true") ? 1 : 0;
    opts.precision = display_precision();
    kenso_result* raw = nullptr;
    if (kenso_run_soliton(manifold.get(), &opts, &raw) != KENSO_OK)
      return die(kenso_last_error(), 2);
    return emit(ResultPtr(raw), soliton_args);
  }

  if (classify->parsed()) {
    ManifoldPtr manifold;
    if (int rc = load_manifold(classify_args, manifold)) return rc;
    kenso_result* raw = nullptr;
    if (kenso_run_classify_vector(manifold.get(), c_vector.c_str(), &raw) != KENSO_OK)
      return die(kenso_last_error(), 2);
    return emit(ResultPtr(raw), classify_args);
  }

  if (theorems->parsed()) {
    ManifoldPtr manifold;
    if (int rc = load_manifold(theorems_args, manifold)) return rc;
    kenso_soliton_opts opts{};
    opts.alpha = t_alpha.c_str();
    opts.beta = t_beta.c_str();
    opts.k = t_k.c_str();
    opts.lambda = t_lambda.empty() ? nullptr : t_lambda.c_str();
    opts.star = (t_star == "true") ? 1 : 0;
    opts.precision = display_precision();
    kenso_result* raw = nullptr;
    if (kenso_run_theorems(manifold.get(), &opts, &raw) != KENSO_OK)
      return die(kenso_last_error(), 2);
    return emit(ResultPtr(raw), theorems_args);
  }

  return 2;
}
