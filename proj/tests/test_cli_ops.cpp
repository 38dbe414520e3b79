#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "vnn/cli_ops.hpp"
#include "vnn/errors.hpp"
#include "vnn/hf.hpp"

using namespace vnn;

namespace {

// The command layer takes signature *files*; drop one in the temp dir.
std::string sig_0st_file() {
  static std::string path = [] {
    auto p = std::filesystem::temp_directory_path() / "vnn_cli_ops_sig_0st.txt";
    std::ofstream out(p);
    out << "0 0\ns 1\nt 1\n";
    return p.string();
  }();
  return path;
}

}  // namespace

TEST_CASE("hf expression grammar") {
  CHECK(eval_hf_expr("{}") == nat_to_hf(0));
  CHECK(eval_hf_expr("ord(3)") == nat_to_hf(3));
  CHECK(eval_hf_expr("  { {} , {{}} }  ") == nat_to_hf(2));
  CHECK(eval_hf_expr("{{},{{}},{}}") == nat_to_hf(2));  // duplicates collapse
  CHECK(eval_hf_expr("kpair({},ord(1))") == kpair(nat_to_hf(0), nat_to_hf(1)));
  CHECK(eval_hf_expr("succ(ord(2))") == nat_to_hf(3));
  CHECK(eval_hf_expr("union(ord(3))") == nat_to_hf(2));
  CHECK(eval_hf_expr("pow({})") == mk_set({nat_to_hf(0)}));
  CHECK(eval_hf_expr("pow(ord(2))").size() == 4);

  CHECK(cmd_hf("ord(3)") == "{{},{{}},{{},{{}}}}  rank=3  ordinal=yes");
  CHECK(cmd_hf("pow({})") == "{{}}  rank=1  ordinal=yes");
  CHECK(cmd_hf("kpair({},{})") == "{{{}}}  rank=2  ordinal=no");
}

TEST_CASE("hf expression rejections carry offsets") {
  auto offset_of = [](const std::string& s) -> std::size_t {
    try {
      eval_hf_expr(s);
    } catch (const ParseError& e) {
      return e.offset;
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(offset_of("ord(") == 4);       // missing count
  CHECK(offset_of("{{}") == 3);        // unclosed brace
  CHECK(offset_of("frob(1)") == 0);    // unknown builder
  CHECK(offset_of("ord(3) {}") == 7);  // trailing input
  CHECK(offset_of("") == 0);
  CHECK_THROWS_AS(eval_hf_expr("ord(1001)"), ParseError);   // cap
  CHECK_THROWS_AS(eval_hf_expr("ord(3) {}"), TrailingTokens);
}

TEST_CASE("term and vnn command output") {
  std::string t = cmd_term(sig_0st_file(), "s t 0");
  CHECK(t.find("term: s t 0\n") == 0);
  CHECK(t.find("height: 2\n") != std::string::npos);
  CHECK(t.find("tokens: 3\n") != std::string::npos);
  CHECK(t.find("image: {") != std::string::npos);

  // ord(2) is a plain set, not a graded tuple: every clause ladder starts at shape.
  CHECK(cmd_vnn_classify(sig_0st_file(), "ord(2)") ==
        "D_S: no\nON_S: no\nVNN_S: no\nfirst failed clause: shape");
  std::string built = cmd_vnn_build(sig_0st_file(), "0");
  CHECK(cmd_vnn_classify(sig_0st_file(), built) ==
        "D_S: yes\nON_S: yes\nVNN_S: yes");
}

TEST_CASE("arithmetic command output") {
  CHECK(cmd_expset(50) == "{1,2,6,42}");
  CHECK(cmd_expset(5000) == "{1,2,6,42,1806}");
  std::string h = cmd_homcount(6, 3);
  CHECK(h == "homs(Z_6 -> Z_3): 1\n  [0,1,2,0,1,2]");
  CHECK(cmd_homcount(4, 3) == "homs(Z_4 -> Z_3): 0");
  CHECK_THROWS_AS(cmd_homcount(0, 3), InvalidShape);
  std::string g = cmd_goodprimes();
  CHECK(g.find("A4 = {2,3,7}") != std::string::npos);
  CHECK(g.find("fixed point: {2,3,7,43}") != std::string::npos);
  CHECK(g.find("rejected 1807 = 13*139") != std::string::npos);
  CHECK(g.find("valid n: {1,2,6,42,1806}") != std::string::npos);
}
