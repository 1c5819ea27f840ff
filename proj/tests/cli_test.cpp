// Drives the installed binary end to end through every subcommand, checking
// printed results, CSV layout, and exit codes against committed fixtures.

#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("hypercount_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  fs::path out = work_dir() / ("out" + std::to_string(counter) + ".txt");
  fs::path err = work_dir() / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  std::string cmd = env_prefix + std::string(HYPERCOUNT_BIN) + " " + args + " > " +
                    out.string() + " 2> " + err.string();
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string fx(const std::string& name) {
  return (fs::path(FIXTURE_DIR) / name).string();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string strip_last_column(const std::string& csv) {
  std::stringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) {
    std::size_t cut = line.rfind(',');
    out += line.substr(0, cut);
    out += '\n';
  }
  return out;
}

long long number_after(const std::string& text, const std::string& key) {
  std::size_t at = text.find(key);
  REQUIRE(at != std::string::npos);
  return std::atoll(text.c_str() + at + key.size());
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("count hom matches the documented example") {
  RunResult r = run("count --mode hom --l 0 --pattern " + fx("edge.hg") +
                    " --input " + fx("k4.hg"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "input: n=4 m=6 kappa_0=3"));
  CHECK(contains(r.out, "pattern: n=2 m=1"));
  CHECK(contains(r.out, "count=12\n"));
  CHECK(contains(r.out, "millis="));
}

TEST_CASE("count sub and arity-collapsing hom") {
  RunResult sub = run("count --mode sub --l inf --pattern " + fx("triangle.hg") +
                      " --input " + fx("k4.hg"));
  CHECK(sub.code == 0);
  CHECK(contains(sub.out, "count=4\n"));

  RunResult hom = run("count --mode hom --l 1 --pattern " + fx("e3.hg") +
                      " --input " + fx("k4.hg"));
  CHECK(hom.code == 0);
  CHECK(contains(hom.out, "count=36\n"));
  CHECK(contains(hom.out, "term 1/"));
}

TEST_CASE("count writes a stable CSV row") {
  fs::path csv_a = work_dir() / "row_a.csv";
  fs::path csv_b = work_dir() / "row_b.csv";
  std::string base = "count --mode hom --l 0 --pattern " + fx("edge.hg") +
                     " --input " + fx("k4.hg") + " --csv ";
  CHECK(run(base + csv_a.string()).code == 0);
  CHECK(run(base + csv_b.string()).code == 0);
  std::string a = slurp(csv_a);
  CHECK(contains(a, "n,m,kappa_l,pattern,l,mode,count,millis\n"));
  CHECK(contains(a, "4,6,3,"));
  CHECK(contains(a, ",0,hom,12,"));
  CHECK(strip_last_column(a) == strip_last_column(slurp(csv_b)));
}

TEST_CASE("count input validation") {
  RunResult bad_level = run("count --mode hom --l 3x --pattern " + fx("edge.hg") +
                            " --input " + fx("k4.hg"));
  CHECK(bad_level.code == 2);
  CHECK(contains(bad_level.err, "--l expects a nonnegative integer or 'inf'"));

  RunResult missing = run("count --mode hom --pattern " + fx("edge.hg") +
                          " --input " + (work_dir() / "absent.hg").string());
  CHECK(missing.code == 2);
  CHECK(contains(missing.err, "input error:"));
  CHECK(contains(missing.err, "absent.hg"));

  fs::path bad = work_dir() / "bad.hg";
  std::ofstream(bad) << "e a\n";
  RunResult malformed = run("count --mode hom --pattern " + fx("edge.hg") +
                            " --input " + bad.string());
  CHECK(malformed.code == 2);
  CHECK(contains(malformed.err, "bad.hg:1"));
  CHECK(contains(malformed.err, "arity"));

  RunResult unknown_flag = run("count --bogus 1 --pattern " + fx("edge.hg") +
                               " --input " + fx("k4.hg"));
  CHECK(unknown_flag.code == 2);
}

TEST_CASE("thread fan-out flag and environment variable") {
  std::string base = "count --mode hom --l 0 --pattern " + fx("edge.hg") +
                     " --input " + fx("k4.hg");
  RunResult flag = run(base + " --threads 2");
  CHECK(flag.code == 0);
  CHECK(contains(flag.out, "count=12\n"));

  RunResult env = run(base, "HYPERCOUNT_THREADS=2 ");
  CHECK(env.code == 0);
  CHECK(contains(env.out, "count=12\n"));

  RunResult bad_env = run(base, "HYPERCOUNT_THREADS=abc ");
  CHECK(bad_env.code == 2);
  CHECK(contains(bad_env.err, "HYPERCOUNT_THREADS"));
}

TEST_CASE("classify reports obstructions and decompositions") {
  RunResult c6 = run("classify --l inf " + fx("c6.hg"));
  CHECK(c6.code == 0);
  CHECK(contains(c6.out, "its_free=false"));
  CHECK(contains(c6.out, "tau=2"));
  CHECK(contains(c6.out, "licl=6"));
  CHECK(contains(c6.out, "witness_core= v1 v3 v5"));
  CHECK(contains(c6.out, "component 0:"));
  CHECK(contains(c6.out, "assignment="));

  RunResult c5 = run("classify --l inf " + fx("c5.hg"));
  CHECK(c5.code == 0);
  CHECK(contains(c5.out, "its_free=true"));
  CHECK(contains(c5.out, "tau=1"));
  CHECK(contains(c5.out, "licl=5"));
  CHECK(contains(c5.out, "bag 0:"));
}

TEST_CASE("dtw prints a witness decomposition") {
  RunResult r = run("dtw --l inf " + fx("c5.hg"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "tau=1"));
  CHECK(contains(r.out, "ordering= "));
  CHECK(contains(r.out, "bag 0:"));
}

TEST_CASE("degeneracy reports the peeling value") {
  RunResult r = run("degeneracy --l inf --emit-ordering " + fx("k4.hg"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "kappa_inf=3"));
  CHECK(contains(r.out, "max_l_outdegree="));
  CHECK(contains(r.out, "ordering= "));

  RunResult level0 = run("degeneracy --l 0 " + fx("k4.hg"));
  CHECK(level0.code == 0);
  CHECK(contains(level0.out, "kappa_0=3"));
}

TEST_CASE("gen random respects the requested bound") {
  fs::path out = work_dir() / "random.hg";
  RunResult gen = run("gen random --n 50 --m 100 --rank 2 --degeneracy 3 --seed 9 -o " +
                      out.string());
  CHECK(gen.code == 0);
  CHECK(contains(gen.out, "wrote "));
  RunResult deg = run("degeneracy --l 0 " + out.string());
  CHECK(deg.code == 0);
  CHECK(number_after(deg.out, "kappa_0=") <= 3);

  RunResult bad = run("gen random --n 10 --m 3 --rank 2 --degeneracy 3 --seed 9 -o " +
                      (work_dir() / "reject.hg").string());
  CHECK(bad.code == 2);
}

TEST_CASE("gen simplex produces the complete k-skeleton") {
  fs::path out = work_dir() / "s2.hg";
  RunResult gen = run("gen simplex --k 2 -o " + out.string());
  CHECK(gen.code == 0);
  CHECK(contains(gen.out, "n=3 m=3"));
  RunResult hom = run("count --mode hom --l inf --pattern " + fx("triangle.hg") +
                      " --input " + out.string());
  CHECK(hom.code == 0);
  CHECK(contains(hom.out, "count=6\n"));
}

TEST_CASE("gen tensor multiplies counts") {
  fs::path out = work_dir() / "tensor.hg";
  RunResult gen = run("gen tensor " + fx("edge.hg") + " " + fx("edge.hg") + " -o " +
                      out.string());
  CHECK(gen.code == 0);
  RunResult single = run("oracle hom --pattern " + fx("edge.hg") + " --input " +
                         fx("edge.hg"));
  RunResult prod = run("oracle hom --pattern " + fx("edge.hg") + " --input " +
                       out.string());
  CHECK(single.code == 0);
  CHECK(prod.code == 0);
  long long base = number_after(single.out, "count=");
  CHECK(number_after(prod.out, "count=") == base * base);
}

TEST_CASE("gen gadget wires groups onto the colored input") {
  fs::path out = work_dir() / "gadget.hg";
  RunResult r = run("gen gadget --pattern " + fx("obstruction3.hg") + " --input " +
                    fx("colored_path.hg") + " --l 0 -o " + out.string());
  CHECK(r.code == 0);
  CHECK(contains(r.out, "core_size=3"));
  CHECK(contains(r.out, "degeneracy="));

  RunResult bad = run("gen gadget --pattern " + fx("obstruction3.hg") + " --witness manual" +
                      " --input " + fx("colored_path.hg") + " -o " + out.string());
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "--witness"));
}

TEST_CASE("oracle counters") {
  RunResult hom = run("oracle hom --pattern " + fx("triangle.hg") + " --input " + fx("k4.hg"));
  CHECK(hom.code == 0);
  CHECK(contains(hom.out, "count=24\n"));

  RunResult sub = run("oracle sub --pattern " + fx("triangle.hg") + " --input " + fx("k4.hg"));
  CHECK(sub.code == 0);
  CHECK(contains(sub.out, "count=4\n"));

  RunResult col = run("oracle colhom --pattern " + fx("triangle.hg") + " --input " +
                      fx("colored_triangle.hg"));
  CHECK(col.code == 0);
  CHECK(contains(col.out, "count=6\n"));

  RunResult simplex = run("oracle simplex --k 2 --input " + fx("k4.hg"));
  CHECK(simplex.code == 0);
  CHECK(contains(simplex.out, "count=4\n"));

  RunResult missing = run("oracle hom --input " + fx("k4.hg"));
  CHECK(missing.code == 2);
  CHECK(contains(missing.err, "requires --pattern"));
}

TEST_CASE("oracle guard rejects oversized inputs with exit 1") {
  fs::path big = work_dir() / "big.hg";
  CHECK(run("gen random --n 12 --m 14 --rank 2 --degeneracy 2 --seed 3 -o " +
            big.string()).code == 0);
  RunResult r = run("oracle hom --pattern " + fx("edge.hg") + " --input " + big.string());
  CHECK(r.code == 1);
  CHECK(contains(r.err, "guard error:"));
}

TEST_CASE("bench emits a deterministic ladder") {
  std::string base = "bench --sizes 60,120 --reps 2 --seed 5 --edge-factor 2 --l 0";
  RunResult a = run(base);
  RunResult b = run(base);
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(contains(a.out, "n,m,kappa_l,pattern,l,mode,count,millis\n"));
  CHECK(contains(a.out, ",C5,0,hom,"));
  std::stringstream lines(a.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 5);
  CHECK(strip_last_column(a.out) == strip_last_column(b.out));
  CHECK(contains(a.err, "bench n=60 rep=0"));

  RunResult bad = run("bench --sizes 10,,20");
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "--sizes"));
}

TEST_CASE("difftest agrees with the oracles") {
  RunResult r = run("difftest --trials 40 --seed 11");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "difftest: 40 trials passed"));
}

TEST_CASE("top-level parsing") {
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("nonsense").code == 2);
}

TEST_SUITE_END();
