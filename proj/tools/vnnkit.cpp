// vnnkit — hereditarily finite sets, free term algebras, and the graded
// von Neumann construction, with a desk-scale theorem verifier.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "vnn/cli_ops.hpp"
#include "vnn/errors.hpp"
#include "vnn/verify.hpp"

namespace {

struct VerifyFlags {
  vnn::VerifyParams params;
  bool json = false;
};

void add_verify_flags(CLI::App* cmd, VerifyFlags& f) {
  cmd->add_flag("--json", f.json, "one JSON object per report line");
  cmd->add_option("--bound", f.params.bound, "numeric search bound");
  cmd->add_option("--sig", f.params.sig, "signature file replacing the built-in pair");
  cmd->add_option("--height", f.params.height, "term fragment height");
  cmd->add_option("--window", f.params.window, "integer window for sb");
  cmd->add_option("--instance", f.params.instance, "sb instance file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hereditarily finite sets, term algebras, and their graded ordinals"};
  app.require_subcommand(1);

  std::string hf_expr;
  CLI::App* hf = app.add_subcommand("hf", "evaluate an hf set expression");
  hf->add_option("expr", hf_expr, "{...} | ord(n) | kpair(a,b) | succ(e) | pow(e) | union(e)")
      ->required();

  std::string term_sig, term_text;
  bool term_compact = false;
  CLI::App* term = app.add_subcommand("term", "parse a prefix term and show its image");
  term->add_option("sigfile", term_sig, "signature file")->required();
  term->add_option("term", term_text, "prefix notation, tokens separated by spaces")
      ->required();
  term->add_flag("--compact", term_compact, "no separators (single-char symbol names)");

  std::string verify_id;
  VerifyFlags vflags;
  CLI::App* verify = app.add_subcommand("verify", "run one theorem checker");
  verify->add_option("theorem", verify_id, "theorem id")->required();
  add_verify_flags(verify, vflags);

  VerifyFlags aflags;
  CLI::App* verify_all = app.add_subcommand("verify-all", "run every theorem checker");
  verify_all->add_flag("--json", aflags.json, "one JSON object per report line");

  CLI::App* vnn = app.add_subcommand("vnn", "the graded construction");
  vnn->require_subcommand(1);
  std::string vb_sig, vb_term;
  CLI::App* vnn_build = vnn->add_subcommand("build", "image of a term under F^V");
  vnn_build->add_option("sigfile", vb_sig)->required();
  vnn_build->add_option("term", vb_term)->required();
  std::string vc_sig, vc_set;
  CLI::App* vnn_classify =
      vnn->add_subcommand("classify", "D_S / ON_S / VNN_S membership of a set");
  vnn_classify->add_option("sigfile", vc_sig)->required();
  vnn_classify->add_option("set", vc_set, "hf expression")->required();

  CLI::App* goodprimes = app.add_subcommand("goodprimes", "the prime stages behind 1806");

  unsigned expset_bound = 5000;
  CLI::App* expset = app.add_subcommand("expset", "moduli with m^(n+1) = m for all m");
  expset->add_option("--bound", expset_bound, "search bound (default 5000)");

  std::size_t hc_n = 0, hc_m = 0;
  CLI::App* homcount = app.add_subcommand("homcount", "pointed successor maps Z_n -> Z_m");
  homcount->add_option("n", hc_n)->required();
  homcount->add_option("m", hc_m)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*hf) {
      std::printf("%s\n", vnn::cmd_hf(hf_expr).c_str());
    } else if (*term) {
      std::printf("%s\n", vnn::cmd_term(term_sig, term_text, term_compact).c_str());
    } else if (*verify) {
      vnn::VerifyReport r = vnn::run_theorem(verify_id, vflags.params);
      std::printf("%s\n", vnn::format_report(r, vflags.json).c_str());
      return r.pass ? 0 : 1;
    } else if (*verify_all) {
      bool all = true;
      std::size_t passed = 0;
      auto reports = vnn::run_all();
      for (const auto& r : reports) {
        std::printf("%s\n", vnn::format_report(r, aflags.json).c_str());
        all &= r.pass;
        passed += r.pass ? 1 : 0;
      }
      if (!aflags.json)
        std::printf("%zu/%zu pass\n", passed, reports.size());
      return all ? 0 : 1;
    } else if (*vnn_build) {
      std::printf("%s\n", vnn::cmd_vnn_build(vb_sig, vb_term).c_str());
    } else if (*vnn_classify) {
      std::printf("%s\n", vnn::cmd_vnn_classify(vc_sig, vc_set).c_str());
    } else if (*goodprimes) {
      std::printf("%s\n", vnn::cmd_goodprimes().c_str());
    } else if (*expset) {
      std::printf("%s\n", vnn::cmd_expset(expset_bound).c_str());
    } else if (*homcount) {
      std::printf("%s\n", vnn::cmd_homcount(hc_n, hc_m).c_str());
    }
  } catch (const vnn::ParseError& e) {
    if (std::string(e.what()).find("offset") == std::string::npos)
      std::fprintf(stderr, "error: %s (at offset %zu)\n", e.what(), e.offset);
    else
      std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const vnn::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
