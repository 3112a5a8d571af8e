#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "comsep/cli.hpp"

using namespace comsep;

namespace {

const std::string fixtures = COMSEP_FIXTURE_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("comsep_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

// Writes the report to disk and runs `verify` on it.
Outcome verify(const json& report, const std::string& name) {
  return run({"verify", "--certificate", temp_file(name, report.dump())});
}

}  // namespace

TEST_CASE("check on the three-element circuit") {
  const auto r = run({"check", "--system", fixtures + "/c3.json", "--json"});
  CHECK(r.code == cli::ok);
  const auto j = r.report();
  CHECK(j["verdict"]["com"] == true);
  CHECK(j["verdict"]["om"] == true);
  CHECK(j["verdict"]["simple"] == true);
  CHECK(verify(j, "check.json").code == cli::ok);

  const auto human = run({"check", "--system", fixtures + "/c3.json"});
  CHECK(human.code == cli::ok);
  CHECK(human.out.find("COM: yes") != std::string::npos);
  CHECK(human.out.find("time:") != std::string::npos);
}

TEST_CASE("separate on collinear sheep") {
  const auto r = run({"separate", "--points", fixtures + "/sheep.json", "--json"});
  CHECK(r.code == cli::negative);
  const auto j = r.report();
  CHECK(j["verdict"]["separable"] == false);
  CHECK(j["failing_subset"] == json({"a", "b", "c"}));
  REQUIRE(j["certificates"].size() == 1);
  CHECK(j["certificates"][0]["kind"] == "failing_subset");
  CHECK(verify(j, "sheep.json").code == cli::ok);
}

TEST_CASE("separate on the meadow needs four points to fail") {
  const auto r = run({"separate", "--points", fixtures + "/meadow.json", "--json"});
  CHECK(r.code == cli::negative);
  CHECK(r.report()["failing_subset"].size() == 4);
  CHECK(verify(r.report(), "meadow.json").code == cli::ok);
}

TEST_CASE("separate against a system target") {
  const auto yes = run({"separate", "--system", fixtures + "/c3.json", "--target", "+0-", "--json"});
  CHECK(yes.code == cli::ok);
  CHECK(yes.report()["verdict"]["separable"] == true);
  CHECK(verify(yes.report(), "sep_yes.json").code == cli::ok);
  const auto no = run({"separate", "--system", fixtures + "/c3.json", "--target", "+++"});
  CHECK(no.code == cli::negative);
}

TEST_CASE("witness and kirchberger reports") {
  const auto w = run({"witness", "--system", fixtures + "/c3.json", "--json"});
  CHECK(w.code == cli::ok);
  const auto j = w.report();
  CHECK(verify(j, "witness.json").code == cli::ok);
  CHECK(w.out.find("\"D\"") != std::string::npos);

  CHECK(run({"witness", "--system", fixtures + "/c3.json", "--target", "+-+"}).code == cli::negative);

  const auto audit = run({"kirchberger", "--system", fixtures + "/c3.json", "--json"});
  CHECK(audit.code == cli::ok);
  CHECK(audit.report()["verdict"]["counterexamples"] == 0);
  const auto table = run({"kirchberger", "--system", fixtures + "/c3.json", "--target", "+++"});
  CHECK(table.code == cli::ok);
  CHECK(table.out.find("C={e1,e2,e3}") != std::string::npos);
}

TEST_CASE("minor, rank and build commands verify") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"contract", "--system", fixtures + "/c3.json", "--elements", "e3"},
        {"delete", "--system", fixtures + "/c3.json", "--elements", "e1,e2"},
        {"reorient", "--system", fixtures + "/c3.json", "--elements", "e2"},
        {"rank", "--system", fixtures + "/c3.json"},
        {"topes", "--system", fixtures + "/c3.json"},
        {"build", "--points", fixtures + "/sheep.json"},
        {"build", "--points", fixtures + "/meadow.json", "--linear"}}) {
    args.push_back("--json");
    const auto r = run(args);
    CHECK(r.code == cli::ok);
    CHECK(verify(r.report(), args[0] + ".json").code == cli::ok);
  }
  const auto c = run({"contract", "--system", fixtures + "/c3.json", "--elements", "e3", "--json"});
  CHECK(c.report()["result"]["covectors"] == json({"+-", "-+", "00"}));
}

TEST_CASE("fuzz with seed 7 over 100 instances") {
  const auto r = run({"fuzz", "--seed", "7", "--count", "100", "--json"});
  const auto j = r.report();
  CHECK(j["claims"]["theorem8"] == 0);
  // The circuit characterization fails on non-OM COMs the corpus contains; see the README.
  CHECK(j["claims"]["prop7"] == 3);
  CHECK(r.code == cli::negative);
  for (const auto& cert : j["certificates"]) {
    if (cert["kind"] != "counterexample" || cert["claim"] != "prop7") continue;
    CHECK(std::find(cert["system"]["covectors"].begin(), cert["system"]["covectors"].end(),
                    std::string(cert["system"]["elements"].size(), '0')) == cert["system"]["covectors"].end());
  }
  CHECK(verify(j, "fuzz.json").code == cli::ok);
  // Byte-identical on replay.
  CHECK(run({"fuzz", "--seed", "7", "--count", "100", "--json"}).out == r.out);
}

TEST_CASE("input errors exit with code 2 and a location") {
  const auto broken = temp_file("broken.json", "{\"elements\": [\"a\"], \"covectors\": [\"+\",");
  const auto r = run({"check", "--system", broken});
  CHECK(r.code == cli::input_error);
  CHECK(r.err.find("byte") != std::string::npos);

  const auto bad_sign = temp_file("bad_sign.json", R"({"elements":["a","b"],"covectors":["+-","+x"]})");
  const auto s = run({"check", "--system", bad_sign});
  CHECK(s.code == cli::input_error);
  CHECK(s.err.find("$.covectors[1]") != std::string::npos);

  const auto floats = temp_file("floats.json", R"({"dim":1,"points":[{"id":"a","coords":[0.5]}]})");
  const auto f = run({"build", "--points", floats});
  CHECK(f.code == cli::input_error);
  CHECK(f.err.find("$.points[0].coords[0]") != std::string::npos);

  const auto dup = temp_file("dup.json", R"({"elements":["a","a"],"covectors":[]})");
  CHECK(run({"check", "--system", dup}).code == cli::input_error);

  CHECK(run({"check", "--system", "/nonexistent/file.json"}).code == cli::input_error);
  CHECK(run({}).code == cli::input_error);
  CHECK(run({"separate", "--system", fixtures + "/c3.json", "--target", "++"}).code == cli::input_error);
  CHECK(run({"witness", "--system", bad_sign}).code == cli::input_error);
  const auto not_com = temp_file("not_com.json", R"({"elements":["a","b"],"covectors":["+0","0+"]})");
  CHECK(run({"witness", "--system", not_com}).code == cli::input_error);
}

TEST_CASE("verify rejects tampered certificates") {
  auto j = run({"separate", "--system", fixtures + "/c3.json", "--target", "+0-", "--json"}).report();
  REQUIRE(!j["certificates"].empty());
  CHECK(cli::verify_document(j).empty());
  auto& cert = j["certificates"][0];
  for (auto& [k, v] : cert.items())
    if (v.is_string() && v.get<std::string>().size() == 3) v = "+++";
  CHECK_FALSE(cli::verify_document(j).empty());
  CHECK(verify(j, "tampered.json").code == cli::negative);

  auto w = run({"witness", "--system", fixtures + "/c3.json", "--json"}).report();
  for (auto& c : w["certificates"])
    if (c["kind"] == "witness") c["D"] = json({"e1", "e2"});
  CHECK_FALSE(cli::verify_document(w).empty());
}
