#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(ASAI_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

} // namespace

TEST_CASE("invariants formats") {
  auto text = run("invariants --qo 3 --n 3 --ell 7");
  CHECK(text.code == 0);
  CHECK(text.out ==
        "e_o: 1\n"
        "N: 3\n"
        "q_pow: 27\n"
        "q_Eo: 3\n"
        "banal: false\n"
        "rel_banal: true\n"
        "xo_char0: 3\n"
        "xo_modell: 3\n"
        "xo_kernel: 1\n");

  auto js = run("--format json invariants --qo 3 --n 3 --ell 7");
  CHECK(js.code == 0);
  CHECK(js.out == R"json({
  "e_o": 1,
  "N": 3,
  "q_pow": 27,
  "q_Eo": 3,
  "banal": false,
  "rel_banal": true,
  "xo_char0": 3,
  "xo_modell": 3,
  "xo_kernel": 1
}
)json");

  auto csv = run("--format csv invariants --qo 3 --n 3 --ell 7");
  CHECK(csv.code == 0);
  CHECK(csv.out ==
        "e_o,N,q_pow,q_Eo,banal,rel_banal,xo_char0,xo_modell,xo_kernel\n"
        "1,3,27,3,false,true,3,3,1\n");

  auto ram = run("--format json invariants --qo 5 --n 6 --e 2 --ell 3");
  CHECK(ram.code == 0);
  CHECK(ram.out.find("\"e_o\": 2") != std::string::npos);
  CHECK(ram.out.find("\"xo_kernel\": 3") != std::string::npos);
}

TEST_CASE("output lands in a file when requested") {
  std::string path = "/tmp/asai_cli_test_inv.md";
  std::remove(path.c_str());
  auto r = run("--format md --output " + path + " invariants --qo 3 --n 3 --ell 7");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(body ==
        "| key | value |\n"
        "| --- | --- |\n"
        "| e_o | 1 |\n"
        "| N | 3 |\n"
        "| q_pow | 27 |\n"
        "| q_Eo | 3 |\n"
        "| banal | false |\n"
        "| rel_banal | true |\n"
        "| xo_char0 | 3 |\n"
        "| xo_modell | 3 |\n"
        "| xo_kernel | 1 |\n");
  std::remove(path.c_str());
}

TEST_CASE("lift census output") {
  auto sigma = run("--format json lifts --dual sigma --qo 3 --n 3 --ell 7 --theta 26");
  CHECK(sigma.code == 0);
  CHECK(sigma.out == R"json({
  "modulus": 728,
  "case": "minus",
  "total": 7,
  "dual_count": 7,
  "class_total": 2,
  "class_dual": 2,
  "representatives": [
    26,
    130
  ]
}
)json");

  auto two = run("lifts --dual sigma --qo 3 --n 3 --ell 2 --theta 26");
  CHECK(two.code == 0);
  CHECK(two.out ==
        "modulus: 728\n"
        "case: ell-two\n"
        "total: 8\n"
        "dual_count: 4\n"
        "class_total: 8\n"
        "class_dual: 4\n"
        "representatives: 13, 26, 52, 104, 143, 195, 286, 377\n");

  auto self = run("lifts --dual self --q 3 --n 4 --ell 5 --theta 4");
  CHECK(self.code == 0);
  CHECK(self.out ==
        "modulus: 80\n"
        "case: minus\n"
        "total: 5\n"
        "dual_count: 1\n"
        "class_total: 2\n"
        "class_dual: 0\n"
        "representatives: 4, 44\n");

  auto plus = run("--format json lifts --dual sigma --qo 3 --n 3 --ell 13 --theta 26");
  CHECK(plus.code == 0);
  CHECK(plus.out.find("\"case\": \"plus\"") != std::string::npos);
  CHECK(plus.out.find("\"total\": 13") != std::string::npos);
  CHECK(plus.out.find("\"class_dual\": 1") != std::string::npos);
}

TEST_CASE("lfactor output") {
  auto banal = run("lfactor --qo 3 --n 3 --char 7");
  CHECK(banal.code == 0);
  CHECK(banal.out ==
        "factor: 1/(1 - X^3)\n"
        "characteristic: 7\n"
        "roots:\n"
        "  - order=1 exponent=0 multiplicity=1\n"
        "  - order=3 exponent=1 multiplicity=1\n"
        "  - order=3 exponent=2 multiplicity=1\n"
        "pole_order: 1\n");

  auto unit = run("lfactor --qo 3 --n 3 --char 13");
  CHECK(unit.code == 0);
  CHECK(unit.out ==
        "factor: 1\n"
        "characteristic: 13\n"
        "roots: \n"
        "pole_order: 0\n");

  auto twist = run("--format json lfactor --qo 3 --n 3 --char 0 --twist 4:1");
  CHECK(twist.code == 0);
  CHECK(twist.out == R"json({
  "factor": "1/(1 - (zeta(4,1) X)^3)",
  "characteristic": 0,
  "roots": [
    {
      "order": 4,
      "exponent": 1,
      "multiplicity": 1
    },
    {
      "order": 12,
      "exponent": 7,
      "multiplicity": 1
    },
    {
      "order": 12,
      "exponent": 11,
      "multiplicity": 1
    }
  ],
  "pole_order": 0
}
)json");

  auto pole = run("lfactor --qo 5 --n 6 --e 2 --char 3");
  CHECK(pole.code == 0);
  CHECK(pole.out ==
        "factor: 1/(1 - X^3)\n"
        "characteristic: 3\n"
        "roots:\n"
        "  - order=1 exponent=0 multiplicity=3\n"
        "pole_order: 3\n");
}

TEST_CASE("scan sweeps and rejects") {
  auto r = run("--format csv scan --qo-range 3:5 --n-range 1:3 --ell-set 3,5");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("q_o,n,e_ffo,e_ef,f_ef,e_sigma,ell,e_o,N,rel_banal,banal,"
                    "xo_char0,xo_modell,xo_kernel,pole_order,period_nonzero\n",
                    0) == 0);
  CHECK(r.out.find("\n5,2,1,1,1,1,3,1,2,false,false,2,2,1,0,false\n") != std::string::npos);
  CHECK(r.out.find("\n5,3,1,1,1,1,3,1,3,true,false,3,1,3,3,true\n") != std::string::npos);
  CHECK(r.out.find("\nrejects\nq_o,n,e_ffo,e_ef,f_ef,e_sigma,ell,rules\n") != std::string::npos);
  CHECK(r.out.find("\n3,1,1,1,1,2,5,ramified-base-required\n") != std::string::npos);
  CHECK(r.out.find("\n3,2,1,1,1,1,5,even-m-relative-banality\n") != std::string::npos);
  CHECK(r.out.find("\n4,") == std::string::npos);
}

TEST_CASE("verify subcommand") {
  auto ok = run("verify --max-modulus 100 --euler-bound 6");
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("pass: true\n", 0) == 0);
  CHECK(ok.out.find("skipped: 22\n") != std::string::npos);
  CHECK(ok.out.find("witness: 0\n") != std::string::npos);

  auto mut = run("verify --max-modulus 100 --euler-bound 4 --mutate");
  CHECK(mut.code == 3);
  CHECK(mut.out.rfind("pass: false\n", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("--help").code == 0);
  CHECK(run("bogus").code == 1);
  CHECK(run("lifts --dual sigma --qo 3 --n 3 --ell 7").code == 1);

  auto nonreg = run("lifts --dual sigma --qo 3 --n 3 --ell 7 --theta 91");
  CHECK(nonreg.code == 2);
  CHECK(nonreg.out == "error: lift enumeration needs a regular index\n");

  auto badq = run("invariants --qo 4 --n 2 --ell 3");
  CHECK(badq.code == 2);
  CHECK(badq.out.find("odd-prime-power") != std::string::npos);

  auto badell = run("invariants --qo 3 --n 3 --ell 6");
  CHECK(badell.code == 2);
  CHECK(badell.out.find("ell-coprime") != std::string::npos);
}
