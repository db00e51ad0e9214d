#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>

#include "doctest.h"
#include "tdl/core/codec.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("tdlab_cli_" + std::to_string(getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string put(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  tdl::write_file(p.string(), text);
  return p.string();
}

Run tdlab(const std::string& args) {
  fs::path out = scratch() / "stdout.txt";
  std::string cmd = std::string(TDLAB) + " " + args + " > " + out.string() + " 2> " + (scratch() / "stderr.txt").string();
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = tdl::read_file(out.string());
  return r;
}

const char* kPath3 = "p edge 3 2\ne 1 2\ne 2 3\n";
const char* kK4 = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";
const char* kChain3 = "s tdd 3 3\n1 0\n2 1\n3 2\n";
const char* kChain4 = "s tdd 4 4\n1 0\n2 1\n3 2\n4 3\n";

const char* kParity =
    "states: init scan e o acc\nalphabet: 0 1 #\ninit: init\naccept: acc\nmeta: work=1 stack=4 steps=10\n"
    "init * * * -> scan = 0 1 0 push:#\nscan 0 * * -> scan = 1 1 0 push:0\nscan 1 * * -> scan = 1 1 0 push:1\n"
    "scan _ * * -> e = 0 -1 0 -\ne * 0 * -> e = 0 -1 0 pop\ne * 1 * -> o = 0 -1 0 pop\n"
    "o * 0 * -> o = 0 -1 0 pop\no * 1 * -> e = 0 -1 0 pop\ne * # * -> acc = 0 0 0 pop\n";

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(tdlab("").code == 2);
  CHECK(tdlab("bogus").code == 2);
  CHECK(tdlab("solve-3col xx a b").code == 2);
  CHECK(tdlab("validate /nonexistent/g.gr /nonexistent/d.tdd").code == 2);
  CHECK(tdlab("--help").code == 0);
}

TEST_CASE("validate") {
  auto g = put("p3.gr", kPath3), d = put("p3.tdd", kChain3), k4 = put("k4.gr", kK4);
  auto r = tdlab("validate " + g + " " + d);
  CHECK(r.code == 0);
  CHECK(r.out == "s valid td 3\n");
  r = tdlab("validate " + k4 + " " + d);
  CHECK(r.code == 3);
  CHECK(r.out.find("c witness") != std::string::npos);
  auto junk = put("junk.tdd", "s tdd x\n");
  CHECK(tdlab("validate " + g + " " + junk).code == 3);
}

TEST_CASE("transform") {
  auto g = put("p3.gr", kPath3), d = put("p3.tdd", kChain3);
  auto r = tdlab("transform to-path " + g + " " + d);
  CHECK(r.code == 0);
  auto pd = put("p3.td", r.out);
  CHECK(tdlab("validate " + g + " " + pd).out == "s valid pw 2\n");
  r = tdlab("transform to-tdd " + g + " " + pd);
  CHECK(r.code == 0);
  CHECK(tdlab("validate " + g + " " + put("p3b.tdd", r.out)).code == 0);
  CHECK(tdlab("transform dfs " + g).code == 0);
  CHECK(tdlab("transform to-tdd " + g + " " + d).code == 2);
  CHECK(tdlab("transform to-path " + put("k4.gr", kK4) + " " + d).code == 3);
}

TEST_CASE("solve-3col") {
  auto g = put("p3.gr", kPath3), d = put("p3.tdd", kChain3);
  auto k4 = put("k4.gr", kK4), d4 = put("k4.tdd", kChain4);
  auto r = tdlab("--meter solve-3col td " + g + " " + d);
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("s colorable\nm frames "));
  CHECK(tdlab("solve-3col td " + k4 + " " + d4).code == 1);
  auto pw = put("k4.td", tdlab("transform to-path " + k4 + " " + d4).out);
  CHECK(tdlab("solve-3col pw " + k4 + " " + pw).code == 1);
  CHECK(tdlab("solve-3col td " + k4 + " " + d).code == 3);
  CHECK(tdlab("solve-3col pw " + k4 + " " + d4).code == 2);
}

TEST_CASE("count-ds on the path 1-2-3") {
  auto g = put("p3.gr", kPath3), d = put("p3.tdd", kChain3);
  auto r = tdlab("count-ds exact " + g + " " + d);
  CHECK(r.code == 0);
  CHECK(r.out == "q 0 0\nq 1 1\nq 2 3\nq 3 1\n");
  r = tdlab("count-ds lowspace " + g + " " + d);
  CHECK(r.code == 0);
  CHECK(r.out.ends_with("q 0 0\nq 1 1\nq 2 3\nq 3 1\n"));
  CHECK(tdlab("count-ds exact " + put("k4.gr", kK4) + " " + d).code == 3);
}

TEST_CASE("max-is") {
  auto g = put("p3.gr", kPath3), d = put("p3.tdd", kChain3);
  auto r = tdlab("max-is " + g + " " + d);
  CHECK(r.code == 0);
  CHECK(r.out == "s 2\n");
  CHECK(tdlab("max-is " + g + " " + d + " --threshold 2").code == 0);
  CHECK(tdlab("max-is " + g + " " + d + " --threshold 3").code == 1);
}

TEST_CASE("gadget") {
  auto prefix = (scratch() / "ram3").string();
  CHECK(tdlab("gadget ram 3 -o " + prefix).code == 0);
  CHECK(fs::exists(prefix + ".cnf"));
  CHECK(fs::exists(prefix + ".tdd"));
  CHECK(tdlab("gadget ram 0").code == 2);
  auto m = put("w.tm",
               "states: a b\nalphabet: x\ninit: a\naccept: b\na * * _ -> b x 0 0 0\n");
  auto r = tdlab("gadget comp " + m + " --space 1 --steps 2 --height 0");
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("c name"));
  CHECK(tdlab("gadget comp " + m + " --space 0 --steps 2 --height 0").code == 3);
}

TEST_CASE("reduce") {
  auto g = put("p3.gr", kPath3), d = put("p3.tdd", kChain3);
  auto prefix = (scratch() / "red").string();
  CHECK(tdlab("reduce 3col-to-3sat " + g + " " + d + " -o " + prefix).code == 0);
  auto cert = tdl::read_file(prefix + ".cert");
  CHECK(cert.starts_with("c widthcert 3 "));
  CHECK(tdlab("reduce is-to-vc " + g + " " + d).code == 2);
  auto r = tdlab("reduce is-to-vc " + g + " " + d + " --k 2");
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("c threshold 1\n"));
  CHECK(tdlab("reduce vc-to-ds " + put("iso.gr", "p edge 2 0\n") + " " + put("iso.tdd", "s tdd 2 1\n1 0\n2 0\n") +
              " --k 1")
            .code == 3);
}

TEST_CASE("auxsa") {
  auto m = put("par.sm", kParity);
  auto r = tdlab("auxsa sim " + m + " --input 101 --transcript");
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("s accept\n"));
  CHECK(tdlab("auxsa sim " + m + " --input 100").code == 1);
  CHECK(tdlab("auxsa check " + m).code == 3);
  r = tdlab("auxsa regularize " + m + " --space 4 --n 3");
  REQUIRE(r.code == 0);
  auto reg = put("reg.sm", r.out);
  r = tdlab("auxsa check " + reg + " --input 011 --steps 100000");
  CHECK(r.code == 0);
  CHECK(r.out == "r a ok\nr b ok\nr c ok\n");
  CHECK(tdlab("auxsa sim " + reg + " --input 010 --steps 100000").code == 1);
  CHECK(tdlab("auxsa regularize " + m).code == 2);
  CHECK(tdlab("auxsa compile " + m + " --input 1").code == 3);
  CHECK(tdlab("auxsa sim three-col --graph " + put("k4.gr", kK4) + " --tdd " + put("k4.tdd", kChain4)).code == 1);
  CHECK(tdlab("auxsa sim three-col").code == 2);
}

TEST_CASE("primes") {
  auto r = tdlab("primes 21");
  CHECK(r.code == 0);
  CHECK(r.out == "p 23\np 29\np 31\np 37\np 41\nc product 31367009\ns exceeds 2^21\n");
  CHECK(tdlab("primes 0").code == 2);
}

TEST_CASE("identical inputs give identical output") {
  auto g = put("p3.gr", kPath3), d = put("p3.tdd", kChain3);
  for (const std::string& args : std::vector<std::string>{"count-ds lowspace " + g + " " + d, "reduce 3col-to-3sat " + g + " " + d,
                           std::string("gadget ram 4"), "transform to-path " + g + " " + d})
    CHECK(tdlab(args).out == tdlab(args).out);
}
