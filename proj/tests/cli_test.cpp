#include <string>

#include "doctest.h"
#include "support/subprocess.hpp"

using testsup::run_command;

namespace {

const std::string kBin = SCOPELAB_BIN;
const std::string kCorpus = CORPUS_DIR;

std::string script(const std::string& name) {
    return kCorpus + "/" + name;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("run picks the discipline from the flag") {
    auto dynamic = run_command(kBin + " run " + script("inner_outer.slx") +
                               " --discipline dynamic");
    CHECK(dynamic.exit_code == 0);
    CHECK(dynamic.out == "6\n");
    CHECK(dynamic.err == "");

    auto lexical = run_command(kBin + " run " + script("inner_outer.slx") +
                               " --discipline lexical");
    CHECK(lexical.exit_code == 0);
    CHECK(lexical.out == "3\n");
}

TEST_CASE("run defaults to the dynamic discipline with eager defaults") {
    auto result = run_command(kBin + " run " + script("inner_outer.slx"));
    CHECK(result.exit_code == 0);
    CHECK(result.out == "6\n");
}

TEST_CASE("diff reports divergence and exits 1") {
    auto result = run_command(kBin + " diff " + script("inner_outer.slx"));
    CHECK(result.exit_code == 1);
    CHECK(result.out == "DIVERGENT\nstdout[0]: dynamic=6 lexical=3\n");
}

TEST_CASE("diff exits 0 on identical behavior") {
    auto result = run_command(kBin + " diff " + script("nested_chain.slx"));
    CHECK(result.exit_code == 0);
    CHECK(result.out == "IDENTICAL\n");
}

TEST_CASE("program errors exit 1 with a prefixed message on stderr") {
    auto result = run_command(kBin + " run " + script("super_assign.slx") +
                              " --discipline dynamic");
    CHECK(result.exit_code == 1);
    CHECK(result.out == "");
    CHECK(result.err.rfind("error[DisciplineError] line ", 0) == 0);
}

TEST_CASE("lazy defaults flag") {
    auto result = run_command(kBin + " run " + script("lazy_defaults.slx") +
                              " --discipline dynamic --defaults lazy");
    CHECK(result.exit_code == 0);
    CHECK(result.out ==
          "2 20 7\n"
          "LAZY a 3\n"
          "LAZY b 4\n"
          "LAZY x 2\n"
          "LAZY y x * 10\n"
          "LAZY z a + b\n"
          "GLOBAL y 8\n"
          "GLOBAL z 9\n");
}

TEST_CASE("trace goes to stderr and leaves stdout untouched") {
    auto plain = run_command(kBin + " run " + script("inner_outer.slx") +
                             " --discipline dynamic");
    auto traced = run_command(kBin + " run " + script("inner_outer.slx") +
                              " --discipline dynamic --trace");
    CHECK(traced.exit_code == 0);
    CHECK(traced.out == plain.out);
    CHECK(traced.err == "resolve x [DYNAMIC]: miss INNER, hit OUTER = 6\n");
}

TEST_CASE("dump appends the final global scope") {
    auto result = run_command(kBin + " dump " + script("dynamic_global_update.slx") +
                              " --discipline dynamic");
    CHECK(result.exit_code == 0);
    CHECK(result.out ==
          "GLOBAL my_macro2 <routine:my_macro2>\n"
          "GLOBAL x1 19\n"
          "GLOBAL y1 17\n");

    auto lexical = run_command(kBin + " dump " + script("dynamic_global_update.slx") +
                               " --discipline lexical");
    CHECK(lexical.out ==
          "GLOBAL my_macro2 <routine:my_macro2>\n"
          "GLOBAL x1 9\n"
          "GLOBAL y1 7\n");
}

TEST_CASE("usage and IO failures exit 2") {
    CHECK(run_command(kBin).exit_code == 2);
    CHECK(run_command(kBin + " run").exit_code == 2);
    CHECK(run_command(kBin + " run /nonexistent/path.slx").exit_code == 2);
    CHECK(run_command(kBin + " run " + script("inner_outer.slx") + " --discipline sideways")
              .exit_code == 2);
    CHECK(run_command(kBin + " frobnicate x").exit_code == 2);
    CHECK(run_command(kBin + " diff /nonexistent/path.slx").exit_code == 2);
}

TEST_CASE("help exits 0") {
    CHECK(run_command(kBin + " --help").exit_code == 0);
}

TEST_SUITE_END();
