#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"
#include "vnn/errors.hpp"
#include "vnn/verify.hpp"

using namespace vnn;

TEST_CASE("theorem id registry") {
  const auto& ids = theorem_ids();
  CHECK(ids.size() == 16);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  for (const char* id : {"thm1-expset", "goodprimes", "zn-homs", "thm-rec-alg-fragment",
                         "lemma-ordergen", "thm-uuu", "thm-valg", "d1s-iso",
                         "ons-subalg", "vnn-char", "zm-prime", "sis-wo", "sb",
                         "skolem", "trees", "thm-order"})
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  CHECK_THROWS_AS(run_theorem("no-such-theorem"), UnknownTheorem);
}

TEST_CASE("individual reports") {
  VerifyReport r = run_theorem("zn-homs");
  CHECK(r.theorem_id == "zn-homs");
  CHECK(r.pass);
  CHECK_FALSE(r.witnesses.empty());

  // a smaller bound still passes and is reflected in the witness text
  VerifyParams p;
  p.bound = 6;
  VerifyReport small = run_theorem("zn-homs", p);
  CHECK(small.pass);
  CHECK(small.witnesses.back().find("<= 6") != std::string::npos);

  VerifyParams eb;
  eb.bound = 50;
  VerifyReport es = run_theorem("thm1-expset", eb);
  CHECK(es.pass);  // {1,2,6,42} is the right prefix below 50
  CHECK(es.witnesses.front().find("{1,2,6,42}") != std::string::npos);

  // a window override rescales the doubling instance's expected chain
  VerifyParams wp;
  wp.window = 32;
  VerifyReport sw = run_theorem("sb", wp);
  CHECK(sw.pass);
  CHECK(sw.witnesses.front() == "D on [0,32] = {1,2,4,8,16,32}");
}

TEST_CASE("report formatting") {
  VerifyReport r;
  r.theorem_id = "sb";
  r.pass = true;
  r.witnesses = {"first", "second"};
  r.elapsed_ms = 7;
  CHECK(format_report(r, false) == "sb pass 7\n  first\n  second");
  r.pass = false;
  CHECK(format_report(r, false) == "sb fail 7\n  first\n  second");

  auto j = nlohmann::json::parse(format_report(r, true));
  CHECK(j["theorem_id"] == "sb");
  CHECK(j["status"] == "fail");
  CHECK(j["elapsed_ms"] == 7);
  CHECK(j["witnesses"].size() == 2);
  CHECK(format_report(r, true).find('\n') == std::string::npos);
}

TEST_CASE("a fast slice of run_all ordering") {
  // full run_all is exercised by the acceptance suite; here just check
  // that per-theorem runs come back in registry order for a cheap subset
  std::vector<std::string> cheap = {"goodprimes", "skolem", "zn-homs"};
  CHECK(std::is_sorted(cheap.begin(), cheap.end()));
  for (const std::string& id : cheap) {
    VerifyReport r = run_theorem(id);
    CHECK(r.pass);
    CHECK(r.theorem_id == id);
  }
}
