#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gpres/cli.hpp"
#include "gpres/presentation.hpp"

using namespace gpres;

namespace {
  std::string data(char const* name) {
    return std::string(GPRES_TEST_DATA_DIR) + "/" + name;
  }

  std::string work(std::string const& name) {
    std::filesystem::create_directories(GPRES_TEST_WORK_DIR);
    return std::string(GPRES_TEST_WORK_DIR) + "/" + name;
  }

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run_gpres(std::vector<std::string> args, bool banner = false) {
    if (!banner) {
      args.insert(args.begin(), "--no-banner");
    }
    std::ostringstream out, err;
    int const          code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  bool contains(std::string const& s, std::string const& part) {
    return s.find(part) != std::string::npos;
  }

  void write(std::string const& path, std::string const& text) {
    std::ofstream(path) << text;
  }

  // Built once: the rank-4 desk presentation.
  std::string const& desk_file() {
    static std::string const path = [] {
      auto const p = work("desk4.gp");
      auto const r = run_gpres({"build", "--max-rank", "4", "--z-radius", "1", "-o", p});
      REQUIRE(r.code == cli::kSuccess);
      return p;
    }();
    return path;
  }
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("build writes a presentation and a log") {
    auto const out = work("free2.gp");
    auto const r   = run_gpres({"build", "--alpha", "3/10", "--h", "4", "--d", "8", "--n", "256",
                            "--max-rank", "2", "-o", out});
    CHECK(r.code == cli::kSuccess);
    auto const p = load_presentation(out);
    CHECK(p.built_rank() == 2);
    CHECK(p.relator_count(2) == 0);
    CHECK(std::filesystem::exists(out + ".log"));

    auto const p4 = load_presentation(desk_file());
    CHECK(p4.relator_count(4) == 104);
  }

  TEST_CASE("build rejects bad parameters and flag mixes") {
    auto const out = work("bad.gp");
    CHECK(run_gpres({"build", "--h", "3", "-o", out}).code == cli::kUsage);
    CHECK(run_gpres({"build", "--alpha", "1/2", "-o", out}).code == cli::kUsage);
    CHECK(run_gpres({"build", "--alpha", "x", "-o", out}).code == cli::kUsage);
    CHECK(run_gpres({"build", "--mode", "targeted", "-o", out}).code == cli::kUsage);
    CHECK(run_gpres({"build", "--mode", "sideways", "-o", out}).code == cli::kUsage);
    CHECK(run_gpres({"build", "--z-radius", "1", "--z-list", data("free.gp"), "-o", out}).code ==
          cli::kUsage);
    CHECK(run_gpres({"build", "--max-rank", "5", "-o", out}).code == cli::kUsage);
    CHECK(run_gpres({"build"}).code == cli::kUsage);
    CHECK(run_gpres({}).code == cli::kUsage);
  }

  TEST_CASE("targeted build from a period file") {
    auto const periods = work("periods.txt");
    auto const zs      = work("z.txt");
    write(periods, "# u for g = [a, b]\nrank 6\na b a' b a b'\n");
    write(zs, "b a' b' a b\n");
    auto const out = work("targeted.gp");
    auto const r   = run_gpres({"build", "--max-rank", "6", "--mode", "targeted", "--periods", periods,
                            "--z-list", zs, "-o", out});
    REQUIRE(r.code == cli::kSuccess);
    CHECK(contains(r.out, "rank 6 periods=1 relators=1"));

    auto const at = run_gpres({"eq", out, "--eq", "star", "--at", "a' b' a b"});
    CHECK(at.code == cli::kSuccess);
    CHECK(contains(at.out, "verdict=trivial"));
    CHECK(contains(at.out, "check=ok"));
  }

  TEST_CASE("check-r exit codes") {
    auto const good = run_gpres({"check-r", desk_file()});
    CHECK(good.code == cli::kSuccess);
    CHECK(contains(good.out, "summary periods=8 relators=104"));

    std::ifstream      in(desk_file());
    std::ostringstream text;
    text << in.rdbuf()
         << "relator period=\"a c1 b c1'\" z=\"1\" t=c1;c2;c3;c4 e=-3,3,-3,3\n";
    auto const bad_path = work("injected.gp");
    write(bad_path, text.str());
    auto const bad = run_gpres({"check-r", bad_path});
    CHECK(bad.code == cli::kFailure);
    CHECK(contains(bad.out, "R1=fail("));

    write(work("malformed.gp"), "gpres v1\nparams alpha=3/10 h=4 d=8 n=256\nrank 1\nrelator word=\"a q\"\n");
    CHECK(run_gpres({"check-r", work("malformed.gp")}).code == cli::kUsage);
    CHECK(run_gpres({"check-r", work("missing.gp")}).code == cli::kUsage);
  }

  TEST_CASE("wp and conj exit codes") {
    CHECK(run_gpres({"wp", data("free.gp"), "a b a' b'"}).code == cli::kFailure);
    auto const three = run_gpres({"wp", data("cyclic3.gp"), "a a a"});
    CHECK(three.code == cli::kSuccess);
    CHECK(contains(three.out, "check=ok"));
    CHECK(run_gpres({"wp", data("free.gp"), "a q"}).code == cli::kUsage);
    CHECK(run_gpres({"wp", data("free.gp")}).code == cli::kUsage);

    auto const v1 = run_gpres({"wp", desk_file(), "--eq-const", "v"});
    CHECK(v1.code == cli::kFailure);
    CHECK(contains(v1.out, "obstruction=length-cut-free"));
    CHECK(run_gpres({"wp", desk_file(), "--eq-const", "w", "--budget", "100"}).code ==
          cli::kUnknown);

    auto const c = run_gpres({"conj", data("free.gp"), "a b", "b a"});
    CHECK(c.code == cli::kSuccess);
    CHECK(contains(c.out, "conjugator="));
    CHECK(run_gpres({"conj", data("free.gp"), "a b", "a' b'"}).code == cli::kFailure);
  }

  TEST_CASE("eq at a point and over a ball") {
    auto const star = run_gpres({"eq", desk_file(), "--eq", "star", "--at", "1"});
    CHECK(star.code == cli::kFailure);

    auto const main0 = run_gpres({"eq", desk_file(), "--eq", "main", "--census", "0", "--budget", "1000"});
    CHECK(main0.code == cli::kUnknown);
    CHECK(contains(main0.out, "1 verdict=unknown"));

    auto const comm = work("comm.eq");
    write(comm, "x a x' a'\n");
    CHECK(run_gpres({"eq", desk_file(), "--eq", "custom", comm, "--at", "a"}).code == cli::kSuccess);
    CHECK(run_gpres({"eq", desk_file(), "--eq", "custom", "--at", "a"}).code == cli::kUsage);
    CHECK(run_gpres({"eq", desk_file(), "--eq", "star", comm, "--at", "a"}).code == cli::kUsage);
    CHECK(run_gpres({"eq", desk_file(), "--eq", "star"}).code == cli::kUsage);
    CHECK(run_gpres({"eq", desk_file(), "--eq", "star", "--at", "1", "--census", "1"}).code ==
          cli::kUsage);

    auto const census = run_gpres({"eq", data("free.gp"), "--eq", "custom", comm, "--census", "1"});
    CHECK(census.code == cli::kSuccess);
    CHECK(contains(census.out, "census radius=1 elements=13 solutions=3 non_solutions=10 unknown=0"));
  }

  TEST_CASE("demo-theorem1") {
    auto const f = run_gpres({"demo-theorem1", "--case", "free", "--A", data("z3.tab"), "--B",
                          data("z2.tab"), "--radius", "2"});
    CHECK(f.code == cli::kSuccess);
    CHECK(contains(f.out, "observed solutions=3"));
    CHECK(contains(f.out, "match=yes"));

    auto const d = run_gpres({"demo-theorem1", "--case", "direct", "--H", data("s3.tab"), "--K",
                          data("z2.tab"), "--eq", data("comm12.eq")});
    CHECK(d.code == cli::kSuccess);
    CHECK(contains(d.out, "observed solutions=4"));

    CHECK(run_gpres({"demo-theorem1", "--case", "free", "--A", data("s3.tab"), "--B",
                 data("z2.tab"), "--radius", "2"})
              .code == cli::kUsage);
    CHECK(run_gpres({"demo-theorem1", "--case", "free", "--A", data("z3.tab")}).code == cli::kUsage);
    CHECK(run_gpres({"demo-theorem1", "--case", "free", "--A", data("z3.tab"), "--B",
                 data("z2.tab"), "--a", "1"})
              .code == cli::kUsage);
  }

  TEST_CASE("banner and determinism") {
    std::vector<std::string> const args{"eq", data("free.gp"), "--eq", "custom",
                                        data("comm_a.eq"), "--census", "2"};
    auto const a = run_gpres(args);
    auto const b = run_gpres(args);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("# gpres", 0) == std::string::npos);
    CHECK(run_gpres(args, true).out.rfind("# gpres ", 0) == 0);
  }

  TEST_CASE("GPRES_BUDGET") {
    std::vector<std::string> const args{"wp", desk_file(), "--eq-const", "w"};
    setenv("GPRES_BUDGET", "lots", 1);
    CHECK(run_gpres(args).code == cli::kUsage);
    setenv("GPRES_BUDGET", "100", 1);
    auto const small = run_gpres(args);
    setenv("GPRES_BUDGET", "5000", 1);
    auto const large = run_gpres(args);
    // --budget wins over the environment.
    auto const flag = run_gpres({"wp", desk_file(), "--eq-const", "w", "--budget", "100"});
    unsetenv("GPRES_BUDGET");
    CHECK(small.code == cli::kUnknown);
    CHECK(large.code == cli::kUnknown);
    CHECK(small.out != large.out);
    CHECK(flag.out == small.out);
  }
}
