#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "artin/cli.hpp"

namespace {

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content)
      : path("cli_test_" + name) {
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

const char* kTriangle444 =
    "[vertices]\na\nb\nc\n"
    "[edges]\na b 4\na c 4\nb c 4\n"
    "[order]\na a^-1 b b^-1 c c^-1\n";

const char* kDihedral4 =
    "[vertices]\na\nb\n"
    "[edges]\na b 4\n";

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = artin::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("normalize") {
  TempFile g("dihedral4.txt", kDihedral4);
  RunResult r = run({"normalize", g.path, "b a b a"});
  CHECK(r.code == 0);
  CHECK(r.out == "a b a b\n");

  r = run({"normalize", g.path, "a a^-1"});
  CHECK(r.out == "\n");
}

TEST_CASE("equal and geodesic") {
  TempFile g("triangle444.txt", kTriangle444);
  RunResult r = run({"equal", g.path, "c b c a b a c b c b", "b c b c a b a c b c"});
  CHECK(r.code == 0);
  CHECK(r.out == "equal\n");

  r = run({"equal", g.path, "a", "b"});
  CHECK(r.code == 1);
  CHECK(r.out == "distinct\n");

  r = run({"geodesic", g.path, "a a^-1"});
  CHECK(r.code == 1);
  CHECK(r.out == "not geodesic\n");
  r = run({"geodesic", g.path, "a b a b"});
  CHECK(r.code == 0);
}

TEST_CASE("trace dump and replay") {
  TempFile g("triangle444.txt", kTriangle444);
  RunResult r = run({"trace", g.path, "c b c a b a c b c b", "--output", "cli_test_trace.txt"});
  CHECK(r.code == 0);
  {
    std::ifstream f("cli_test_trace.txt");
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str().find("step 1: span [6,10) form pure_alternating_pos") !=
          std::string::npos);
    CHECK(ss.str().find("result: b c b c a b a c b c") != std::string::npos);
  }
  r = run({"trace", g.path, "c b c a b a c b c b", "--replay", "cli_test_trace.txt"});
  CHECK(r.code == 0);
  CHECK(r.out.find("replay ok") != std::string::npos);
  std::remove("cli_test_trace.txt");
}

TEST_CASE("omega and kernel-basis") {
  TempFile g("triangle444.txt", kTriangle444);
  RunResult r = run({"omega", g.path, "c", "a^2"});
  CHECK(r.code == 0);
  CHECK(r.out == "(a,+)\n");
  r = run({"omega", g.path, "c", "a b"});
  CHECK(r.out == "none\n");
  r = run({"omega", g.path, "c", "a^-1 b^-1 a^-1 b^-1"});
  CHECK(r.out == "(a,-) (b,-)\n");

  r = run({"kernel-basis", g.path, "c", "--radius", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("retained: 1\n") != std::string::npos);
  CHECK(r.out.find("eliminated: b a^-1 b^-1 a via R(a^-1 b^-1 a^-1 b^-1)") !=
        std::string::npos);
}

TEST_CASE("tower") {
  TempFile g("triangle444.txt", kTriangle444);
  RunResult r = run({"tower", g.path, "--radius", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("poly-free: 3 steps") != std::string::npos);

  TempFile sq("square2222.txt",
              "[vertices]\na\nb\nc\nd\n"
              "[edges]\na b 2\nb c 2\nc d 2\nd a 2\n");
  r = run({"tower", sq.path});
  CHECK(r.code == 1);
  CHECK(r.out.find("unsupported: no admissible vertex") != std::string::npos);
}

TEST_CASE("verify and ball") {
  TempFile g("dihedral4.txt", kDihedral4);
  RunResult r = run({"verify", "L3.10", g.path, "--radius", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("violations 0") != std::string::npos);

  r = run({"ball", g.path, "--radius", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("class 0: ") != std::string::npos);
}

TEST_CASE("error exit codes") {
  RunResult r = run({"frobnicate"});
  CHECK(r.code == 2);

  TempFile g("dihedral4.txt", kDihedral4);
  r = run({"normalize", g.path, "z"});
  CHECK(r.code == 2);

  r = run({"normalize", "no_such_file.txt", "a"});
  CHECK(r.code == 2);

  TempFile t("triangle444.txt", kTriangle444);
  r = run({"normalize", t.path, "a^-1 b^3 a b c^-1 a^2 c b^-1 a b a", "--budget", "1"});
  CHECK(r.code == 3);

  TempFile z2("z2.txt", "[vertices]\na\nb\n[edges]\na b 2\n");
  r = run({"normalize", z2.path, "a b"});
  CHECK(r.code == 2);  // unsupported presentation
}

TEST_CASE("order override changes the normal form") {
  TempFile g("dihedral4.txt", kDihedral4);
  RunResult r = run({"normalize", g.path, "a b a b", "--order", "b b^-1 a a^-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "b a b a\n");
}

TEST_CASE("verification output does not depend on the thread count") {
  TempFile g("triangle444.txt", kTriangle444);
  RunResult one = run({"verify", "L3.1", g.path, "--radius", "3", "--threads", "1"});
  RunResult four = run({"verify", "L3.1", g.path, "--radius", "3", "--threads", "4"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
}
