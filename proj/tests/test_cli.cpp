#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#ifndef WORDCOUNT_CLI
#error "WORDCOUNT_CLI must name the CLI binary"
#endif

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(WORDCOUNT_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

}  // namespace

TEST_CASE("info") {
  const Run r = run("info --no-cache --group 'builtin:cyclic(1)'");
  CHECK(r.code == 0);
  CHECK(has(r, "order 1\n"));
  CHECK(has(r, "class 0\n"));
  const Run q = run("info --no-cache --group 'builtin:quaternion(8)'");
  CHECK(has(q, "class 2\n"));
  CHECK(has(q, "cd 1 2\n"));
}

TEST_CASE("zeta compares methods") {
  const Run r = run("zeta --no-cache --group 'builtin:symmetric(3)' --n 3 --method all");
  CHECK(r.code == 0);
  CHECK(has(r, "()         1           162    162   162"));
  CHECK(has(r, "27     27    27"));
  CHECK(has(r, "methods agree"));
  const Run csv = run("zeta --no-cache --group 'builtin:quaternion(8)' --n 2 --method closed --format csv");
  CHECK(csv.code == 0);
  CHECK(has(csv, "1,1,40,5,8\n"));
  CHECK(has(csv, "x^2,1,24,3,8\n"));
  const Run none = run("zeta --no-cache --group 'builtin:symmetric(4)' --method closed");
  CHECK(none.code == 2);
  const Run dash = run("zeta --no-cache --group 'builtin:symmetric(4)' --method all");
  CHECK(dash.code == 0);
  CHECK(has(dash, "closed: no closed form applies"));
}

TEST_CASE("zeta from invariants") {
  const Run r = run("zeta --family camina-class3 --invariants 128,8,2 --n 3 --method closed");
  CHECK(r.code == 0);
  CHECK(has(r, "1359872"));
  CHECK(has(r, "737280"));
  CHECK(has(r, "FLAGGED identity display 1490944"));
  CHECK(run("zeta --family camina-class3 --invariants 128,8,3 --n 2 --method closed").code == 2);
  CHECK(run("zeta --family camina-class3 --invariants 128,8 --method closed").code == 2);
}

TEST_CASE("count") {
  const Run r = run("count --group 'builtin:symmetric(3)' --word '[x1,x2]' --domain x1=derived --format csv");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "rep_label,class_size,count,probability_numerator,probability_denominator\n"
        "(),1,12,2,3\n"
        "\"(1,2)\",1,0,0,1\n"
        "\"(1,2,3)\",1,3,1,6\n"
        "\"(1,3)\",1,0,0,1\n"
        "\"(2,3)\",1,0,0,1\n"
        "\"(1,3,2)\",1,3,1,6\n");
  const Run one = run("count --group 'builtin:symmetric(3)' --word '[x1,x2]' --format csv --workers 1");
  const Run eight = run("count --group 'builtin:symmetric(3)' --word '[x1,x2]' --format csv --workers 8");
  CHECK(one.out == eight.out);
  CHECK(run("count --group 'builtin:symmetric(3)' --word '[x1,x2' ").code == 2);
  CHECK(run("count --group 'builtin:symmetric(3)' --word '[x1,x2]' --domain x3=derived").code == 2);
  CHECK(run("count --group 'builtin:symmetric(3)' --word '[x1,x2]' --domain x1=bogus").code == 2);
  CHECK(run("count --group 'builtin:symmetric(5)' --word '[x1,x2,x3,x4]' --budget 1000").code == 2);
}

TEST_CASE("chartab and cache") {
  const auto dir = std::filesystem::temp_directory_path() / "wordcount-test-cli-cache";
  std::filesystem::remove_all(dir);
  const std::string args = "chartab --group 'builtin:alternating(4)' --cache " + dir.string();
  const Run first = run(args);
  CHECK(first.code == 0);
  CHECK(has(first, "X4   3       3   -1          0        0"));
  CHECK(!std::filesystem::is_empty(dir));
  const Run second = run(args);
  CHECK(second.out == first.out);
}

TEST_CASE("export and import") {
  const auto path = std::filesystem::temp_directory_path() / "wordcount-test-cli-s3.txt";
  CHECK(run("info --no-cache --group 'builtin:symmetric(3)' --export " + path.string()).code == 0);
  const Run r = run("zeta --no-cache --n 3 --group " + path.string());
  CHECK(r.code == 0);
  CHECK(has(r, "162"));
  CHECK(run("info --group /nonexistent/group.txt").code == 2);
}

TEST_CASE("isoclinic") {
  const Run r = run("isoclinic --group 'builtin:quaternion(8)' --other 'builtin:dihedral(8)'");
  CHECK(r.code == 0);
  CHECK(has(r, "1-isoclinic"));
  CHECK(has(r, "scaling holds"));
  const Run no = run("isoclinic --group 'builtin:quaternion(8)' --other 'builtin:cyclic(8)'");
  CHECK(no.code == 0);
  CHECK(has(no, "not 1-isoclinic"));
}

TEST_CASE("verify and usage") {
  const Run r = run("verify --suite isoclinism");
  CHECK(r.code == 0);
  CHECK(has(r, "PASS isoclinism.scaling.n1"));
  CHECK(has(r, "fail=0"));
  const Run cf = run("verify --suite closed-forms");
  CHECK(cf.code == 0);
  CHECK(has(cf, "FLAGGED unique.display-nontrivial symmetric(3) display=-18 recomputed=27"));
  CHECK(run("verify --suite nope").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("zeta --group 'builtin:symmetric(3)' --n 1").code == 2);
  CHECK(run("bench --group 'builtin:dihedral(8)' --n 3").code == 0);
  CHECK(run("--help").code == 0);
}
