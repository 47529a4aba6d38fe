/// Command-line front end: identity sweeps, named check suites, basis dumps,
/// and the full-matrix-algebra counterexample.  Exit code 0 means verified,
/// 1 means falsified, 2 means a usage or configuration error.  Progress and
/// timing go to stderr; machine-readable results go to stdout or --out.
#include "superal/serialize.hpp"
#include "superal/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace superal;

int default_jobs() {
  const char* env = std::getenv("SUPERAL_JOBS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 1)
    throw std::invalid_argument("SUPERAL_JOBS must be a positive integer, got '" + std::string(env) + "'");
  return static_cast<int>(v);
}

void write_output(const std::string& bytes, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output path: " + out_path);
  os << bytes;
  if (!os) throw std::runtime_error("write failed for output path: " + out_path);
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for standard polynomial identities on matrix superalgebras"};
  app.require_subcommand(1);

  // ---- verify-al ----
  int vn = 1;
  std::string vmode = "exact";
  std::uint64_t vsamples = 1000, vseed = 0;
  std::uint64_t vprime = 2305843009213693951ull;
  int vjobs = 0;  // 0 = use SUPERAL_JOBS or 1
  std::string vout, vformat = "json";
  CLI::App* verify = app.add_subcommand(
      "verify-al", "Sweep the length-(4n+2) alternating identity over osp(1,2n)");
  verify->add_option("--n", vn, "symplectic rank n of osp(1,2n)")->required()->check(CLI::PositiveNumber);
  verify->add_option("--mode", vmode, "exact | modular | random")
      ->check(CLI::IsMember({"exact", "modular", "random"}));
  verify->add_option("--samples", vsamples, "sample count for random mode (default 1000)");
  verify->add_option("--seed", vseed, "seed for random mode (default 0)");
  verify->add_option("--jobs", vjobs, "worker threads (default SUPERAL_JOBS or 1)");
  verify->add_option("--prime", vprime, "modulus for modular mode (default 2^61-1)");
  verify->add_option("--out", vout, "write the report to this path instead of stdout");
  verify->add_option("--format", vformat, "report format (default json)")
      ->check(CLI::IsMember({"json", "text"}));

  // ---- check ----
  std::string cname;
  std::uint64_t cseed = 2025;
  int cjobs = 0;
  std::string cout_path, cformat = "json";
  CLI::App* check = app.add_subcommand("check", "Run a named identity suite");
  check->add_option("--suite", cname, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  check->add_option("--seed", cseed, "seed for the random samples (default 2025)");
  check->add_option("--jobs", cjobs, "worker threads (default SUPERAL_JOBS or 1)");
  check->add_option("--out", cout_path, "write the report to this path instead of stdout");
  check->add_option("--format", cformat, "report format (default json)")
      ->check(CLI::IsMember({"json", "text"}));

  // ---- basis ----
  std::string balg;
  int bn = 1, bp = 0, bq = 0;
  std::string bformat = "json", bout;
  CLI::App* basis = app.add_subcommand("basis", "Print a basis and its structure constants");
  basis->add_option("--algebra", balg, "osp | gl | weyl")
      ->required()
      ->check(CLI::IsMember({"osp", "gl", "weyl"}));
  basis->add_option("--n", bn, "rank: osp(1,2n) / weyl rank n / gl(n,n)")->check(CLI::PositiveNumber);
  basis->add_option("--p", bp, "gl only: even block size (overrides --n)");
  basis->add_option("--q", bq, "gl only: odd block size (overrides --n)");
  basis->add_option("--format", bformat, "json | text")->check(CLI::IsMember({"json", "text"}));
  basis->add_option("--out", bout, "write to this path instead of stdout");

  // ---- counterexample ----
  int xp = 1, xq = 1, xk = 8;
  std::string xformat = "json", xout;
  CLI::App* cx = app.add_subcommand(
      "counterexample", "Evaluate the alternating polynomial at an odd non-nilpotent gl(p,q) element");
  cx->add_option("--p", xp, "even block size")->required()->check(CLI::PositiveNumber);
  cx->add_option("--q", xq, "odd block size")->required()->check(CLI::PositiveNumber);
  cx->add_option("--k", xk, "polynomial length")->required()->check(CLI::PositiveNumber);
  cx->add_option("--format", xformat, "json | text")->check(CLI::IsMember({"json", "text"}));
  cx->add_option("--out", xout, "write to this path instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; any parse error is a usage error
  }

  try {
    if (verify->parsed()) {
      VerifyOptions opt;
      if (vmode == "exact")
        opt.mode = VerifyMode::exact;
      else if (vmode == "modular")
        opt.mode = VerifyMode::modular;
      else
        opt.mode = VerifyMode::random;
      opt.samples = vsamples;
      opt.seed = vseed;
      opt.jobs = vjobs > 0 ? vjobs : default_jobs();
      opt.prime = vprime;
      std::cerr << "verify-al: n=" << vn << " mode=" << vmode << " jobs=" << opt.jobs << "\n";
      Stopwatch sw;
      VerificationReport rep = verify_al(vn, opt);
      std::cerr << "verify-al: " << rep.status << ", " << rep.tuples_checked << " tuples in "
                << sw.ms() << " ms\n";
      write_output(emit_report(rep, vformat), vout);
      return rep.pass() ? 0 : 1;
    }

    if (check->parsed()) {
      int jobs = cjobs > 0 ? cjobs : default_jobs();
      std::cerr << "check: suite=" << cname << " seed=" << cseed << " jobs=" << jobs << "\n";
      Stopwatch sw;
      VerificationReport rep = run_suite(cname, cseed, jobs);
      std::cerr << "check: " << rep.status << ", " << rep.tuples_checked << " checks in "
                << sw.ms() << " ms\n";
      write_output(emit_report(rep, cformat), cout_path);
      return rep.pass() ? 0 : 1;
    }

    if (basis->parsed()) {
      SuperAlgebra g = [&] {
        if (balg == "osp") return osp_algebra(bn);
        if (balg == "weyl") return weyl_realization(bn);
        int p = bp > 0 ? bp : bn;
        int q = bq > 0 ? bq : bn;
        return gl_algebra(p, q);
      }();
      std::string bytes = bformat == "json" ? algebra_to_json(g).dump(2) + "\n" : algebra_to_text(g);
      write_output(bytes, bout);
      return 0;
    }

    if (cx->parsed()) {
      auto [x, val] = counterexample_gl(xp, xq, xk);
      std::string bytes;
      if (xformat == "json") {
        nlohmann::json j;
        j["algebra"] = "gl(" + std::to_string(xp) + "," + std::to_string(xq) + ")";
        j["k"] = std::to_string(xk);
        j["element"] = matrix_to_json(x);
        j["value"] = matrix_to_json(val);
        j["nonzero"] = !val.is_zero();
        bytes = j.dump(2) + "\n";
      } else {
        std::ostringstream os;
        os << "algebra: gl(" << xp << "," << xq << ")\nk: " << xk << "\nnonzero: "
           << (val.is_zero() ? "false" : "true") << "\nvalue:\n";
        for (int r = 0; r < val.dim().total(); ++r) {
          os << " ";
          for (int c = 0; c < val.dim().total(); ++c) os << " " << val(r, c).str();
          os << "\n";
        }
        bytes = os.str();
      }
      write_output(bytes, xout);
      return val.is_zero() ? 1 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
