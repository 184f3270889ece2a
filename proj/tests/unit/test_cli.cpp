#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "fdzeros/json_io.hpp"

using fdzeros::Json;
namespace cli = fdzeros::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("fdzeros_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json"))
                .string();
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

const char* kPreserver = R"({"lambda": [0, 1], "terms": [{"j": -1, "a": [1, 0]}, {"j": 1, "a": [1, 0]}]})";
const char* kRealShift = R"({"lambda": [1, 0], "terms": [{"j": 0, "a": [1, 0]}, {"j": 1, "a": [1, 0]}]})";
const char* kXsqPlus1 = R"({"coeffs": [[1, 0], [0, 0], [1, 0]]})";

}  // namespace

TEST_CASE("zeros subcommand") {
  const Result r = run({"zeros", "--n", "2", "--theta", "1.5707963", "--h", "1"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("count") == 2);
  CHECK(j.at("zeros")[0].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(j.at("zeros")[1].get<double>() == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(j.at("check").at("residuals").size() == 2);

  const Result pi = run({"zeros", "--n", "3", "--theta-pi", "1"});
  REQUIRE(pi.code == 0);
  CHECK(Json::parse(pi.out).at("count") == 2);
}

TEST_CASE("analyze subcommand reads files and stdin") {
  const TempFile f(kPreserver);
  const Result a = run({"analyze", f.path()});
  REQUIRE(a.code == 0);
  CHECK(Json::parse(a.out).at("hyperbolicity_preserver").get<bool>());

  const Result b = run({"analyze", "-"}, kRealShift);
  REQUIRE(b.code == 0);
  CHECK_FALSE(Json::parse(b.out).at("hyperbolicity_preserver").get<bool>());

  const Result c = run({"analyze", "-", "--tol", "1e-3"}, kPreserver);
  CHECK(c.code == 0);
}

TEST_CASE("output is the serialized module result") {
  const TempFile f(kPreserver);
  const Result a = run({"analyze", f.path()});
  const Json expected = fdzeros::to_json(fdzeros::analyze(fdzeros::operator_from_json(Json::parse(kPreserver))));
  CHECK(a.out == expected.dump(2) + "\n");
}

TEST_CASE("apply and tb subcommands") {
  const TempFile op(kPreserver), p(kXsqPlus1);
  const Result a = run({"apply", op.path(), p.path()});
  REQUIRE(a.code == 0);
  const Json ja = Json::parse(a.out);
  CHECK(ja.at("roots").at("roots").size() == 2);
  CHECK(ja.contains("image"));

  const Result t = run({"tb", p.path(), "--theta-pi", "0.5", "--h", "5"});
  REQUIRE(t.code == 0);
  const Json jt = Json::parse(t.out);
  CHECK(jt.at("realness").at("is_real_rooted").get<bool>());

  const Result missing = run({"tb", p.path(), "--h", "1"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("--theta") != std::string::npos);

  const Result both = run({"tb", p.path(), "--theta", "1", "--theta-pi", "0.5", "--h", "1"});
  CHECK(both.code == 2);

  const Result near = run({"tb", p.path(), "--theta", "1e-9", "--h", "1"});
  CHECK(near.code == 0);
  CHECK(near.err.find("warning") != std::string::npos);
}

TEST_CASE("mesh subcommand prints a scalar") {
  const Result r = run({"mesh", "-"}, R"({"coeffs": [[-1, 0], [0, 0], [1, 0]]})");
  REQUIRE(r.code == 0);
  CHECK(r.out == "2\n");
  const Result bad = run({"mesh", "-"}, kXsqPlus1);
  CHECK(bad.code == 2);
  CHECK(bad.err.find("NotRealRooted") != std::string::npos);
}

TEST_CASE("walsh and apolar subcommands") {
  const TempFile p(R"({"coeffs": [[1, 0], [-2, 0], [1, 0]]})"), q(R"({"coeffs": [[1, 0], [2, 0], [1, 0]]})");
  const Result w = run({"walsh", p.path(), q.path(), "--frame", "2"});
  REQUIRE(w.code == 0);
  const auto poly = fdzeros::polynomial_from_json(Json::parse(w.out));
  CHECK(*poly.degree() == 2);

  const Result a = run({"apolar", p.path(), q.path(), "--frame", "2"});
  REQUIRE(a.code == 0);
  const Json ja = Json::parse(a.out);
  CHECK_FALSE(ja.at("apolar").get<bool>());
  CHECK(ja.at("sum_magnitude").get<double>() == doctest::Approx(8.0));

  CHECK(run({"walsh", p.path(), q.path(), "--frame", "1"}).code == 2);
}

TEST_CASE("asymptotics subcommand") {
  const TempFile p(kXsqPlus1);
  const Result r = run({"asymptotics", p.path(), "--theta-pi", "0.5", "--steps", "3", "--summary", "-"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("h,j,actual,predicted,residual,scaled_residual\n", 0) == 0);
  const auto brace = r.out.find('{');
  REQUIRE(brace != std::string::npos);
  const Json s = Json::parse(r.out.substr(brace));
  CHECK(s.at("omega_bound_ok").get<bool>());

  const Result low = run({"asymptotics", p.path(), "--theta", "0.3", "--h-min", "1"});
  CHECK(low.code == 2);
  CHECK(low.err.find("matching floor") != std::string::npos);
}

TEST_CASE("witness subcommand") {
  const Result found = run({"witness", "-"}, kRealShift);
  REQUIRE(found.code == 0);
  CHECK(Json::parse(found.out).at("offense").get<double>() == doctest::Approx(0.5));
  const Result none = run({"witness", "-"}, kPreserver);
  CHECK(none.code == 0);
  CHECK(none.out == "inconclusive\n");
}

TEST_CASE("verify subcommand") {
  const Result ok = run({"verify", "--seed", "42", "--trials", "2"});
  CHECK(ok.code == 0);
  CHECK(Json::parse(ok.out).at("passed").get<bool>());

  const Result bad = run({"verify", "--trials", "2", "--inject-broken-operator"});
  CHECK(bad.code == 1);
  const Json report = Json::parse(bad.out);
  Json failure;
  for (const auto& p : report.at("properties"))
    if (!p.at("example_failure").is_null()) failure = p.at("example_failure");
  REQUIRE(failure.is_object());
  const Result replayed = run({"verify", "--inject-broken-operator", "--replay", "-"}, failure.dump());
  CHECK(replayed.code == 1);
  CHECK(Json::parse(replayed.out).at("instance") == failure);
}

TEST_CASE("parse and validation errors exit 2 naming the field") {
  const Result r = run({"mesh", "-"}, R"({"coeffs": [[1, 0], ["x", 0]]})");
  CHECK(r.code == 2);
  CHECK(r.err.find("coeffs[1][0]") != std::string::npos);

  const Result op = run({"analyze", "-"}, R"({"lambda": [0, 1], "terms": [{"j": 1, "a": [1, 0]}]})");
  CHECK(op.code == 2);
  CHECK(op.err.find("terms") != std::string::npos);

  CHECK(run({"analyze", "/nonexistent/op.json"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"zeros", "--n", "-1", "--theta", "0"}).code == 2);
  CHECK(run({"verify", "--trials", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
