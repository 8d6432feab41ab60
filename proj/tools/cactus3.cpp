#include "cactus3/bijection.hpp"
#include "cactus3/cactus.hpp"
#include "cactus3/counting.hpp"
#include "cactus3/io_json.hpp"
#include "cactus3/tree.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <climits>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

namespace {

using cactus3::ImageTuple;
using cactus3::PartitionedCactus;
using cactus3::TreeProfile;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

int enumeration_limit(bool force) {
  if (force) return INT_MAX;
  if (const char* env = std::getenv("CACTUS3_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("CACTUS3_MAX_N", "must be an integer");
    }
  }
  return cactus3::kDefaultEnumerationLimit;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
  out << text;
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("input is not valid JSON");
  return j;
}

struct VerifyStats {
  long checks = 0;
  bool pass = true;
  std::string counterexample;

  void fail(const std::string& what) {
    if (pass) counterexample = what;
    pass = false;
  }
};

void verify_theorem1(int max_n, int jobs, int limit, VerifyStats& st) {
  for (int n = 1; n <= max_n; ++n) {
    auto report = cactus3::theorem1_check(n, jobs, limit);
    ++st.checks;
    std::cout << "theorem1 n=" << n << ": " << (report.pass ? "pass" : "fail") << "\n";
    if (!report.pass) {
      st.fail("theorem1 n=" + std::to_string(n) + ": lhs " + report.lhs + " vs rhs " +
              report.rhs);
      return;
    }
  }
}

void verify_jackson(int max_n, VerifyStats& st) {
  for (int n = 1; n <= max_n; ++n)
    for (int p1 = 1; p1 <= n; ++p1)
      for (int p2 = 1; p2 <= n; ++p2)
        for (int p3 = 1; p3 <= n; ++p3) {
          ++st.checks;
          mpz_class lhs = cactus3::jackson_symmetric(p1, p2, p3, n);
          mpz_class rhs = cactus3::i_count_formula(p1, p2, p3, n);
          if (lhs != rhs) {
            st.fail("jackson p=(" + std::to_string(p1) + "," + std::to_string(p2) + "," +
                    std::to_string(p3) + ") n=" + std::to_string(n) + ": " + lhs.get_str() +
                    " vs " + rhs.get_str());
            return;
          }
        }
  std::cout << "jackson: " << st.checks << " profiles up to n=" << max_n << " agree\n";
}

void verify_ct(int max_total, VerifyStats& st) {
  for (int p1 = 1; p1 <= max_total; ++p1)
    for (int p2 = 1; p1 + p2 <= max_total; ++p2)
      for (int p3 = 1; p1 + p2 + p3 <= max_total; ++p3)
        for (int a = 0; a <= 2; ++a)
          for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
              TreeProfile pr{p1, p2, p3, a, b, c};
              ++st.checks;
              mpz_class formula = cactus3::ct_count_formula(pr);
              mpz_class brute = static_cast<long>(cactus3::enumerate_ct(pr).size());
              if (formula != brute) {
                st.fail("ct " + pr.to_string() + ": formula " + formula.get_str() +
                        " vs enumeration " + brute.get_str());
                return;
              }
            }
  std::cout << "ct: " << st.checks << " profiles with at most " << max_total
            << " vertices agree\n";
}

void verify_bijection(int max_n, int limit, VerifyStats& st) {
  for (int n = 1; n <= max_n; ++n) {
    long count = 0;
    std::map<std::array<int, 3>, long> by_profile;
    bool failed = false;
    cactus3::enumerate_cc_all(
        n,
        [&](const PartitionedCactus& pc) {
          if (failed) return;
          ++count;
          ++by_profile[{pc.pi1.block_count(), pc.pi2.block_count(), pc.pi3.block_count()}];
          ImageTuple tup = cactus3::theta_forward(pc);
          PartitionedCactus back = cactus3::theta_inverse(tup);
          if (!(back == pc)) {
            st.fail("bijection round trip failed on n=" + std::to_string(n) +
                    " alpha1=" + pc.alpha1.to_cycle_string() +
                    " alpha2=" + pc.alpha2.to_cycle_string());
            failed = true;
          }
        },
        limit);
    if (failed) return;
    for (const auto& [p, cnt] : by_profile) {
      ++st.checks;
      mpz_class expected = cactus3::i_count_formula(p[0], p[1], p[2], n);
      if (expected != cnt) {
        st.fail("image count p=(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," +
                std::to_string(p[2]) + ") n=" + std::to_string(n) + ": enumerated " +
                std::to_string(cnt) + " vs formula " + expected.get_str());
        return;
      }
    }
    std::cout << "bijection n=" << n << ": " << count << " cacti round-trip, "
              << by_profile.size() << " profiles match the counting formula\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bijective enumeration of long-cycle factorizations into three permutations"};
  app.require_subcommand(1);
  app.fallthrough();

  bool force = false;
  int jobs = 1;
  app.add_flag("--force", force, "Ignore the enumeration size limits");
  app.add_option("--jobs", jobs, "Worker threads for brute-force enumeration")
      ->check(CLI::PositiveNumber);

  // count-m
  auto* cmd_count_m = app.add_subcommand("count-m", "Brute-force factorization counts by cycle counts");
  int cm_n = 0;
  std::string cm_format = "csv";
  cmd_count_m->add_option("--n", cm_n, "Ground-set size")->required()->check(CLI::PositiveNumber);
  cmd_count_m->add_option("--format", cm_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  // count
  auto* cmd_count = app.add_subcommand("count", "Count partitioned cacti / image tuples");
  std::vector<int> ct_p;
  int ct_n = 0;
  std::string ct_method = "formula";
  cmd_count->add_option("--p", ct_p, "Block counts p1,p2,p3")->required()->delimiter(',')
      ->expected(3);
  cmd_count->add_option("--n", ct_n, "Ground-set size")->required()->check(CLI::PositiveNumber);
  cmd_count->add_option("--method", ct_method, "Counting method")
      ->check(CLI::IsMember({"formula", "stirling", "brute", "symmetric"}));

  // ct-count
  auto* cmd_ct = app.add_subcommand("ct-count", "Count cactus trees of a profile");
  std::vector<int> ctc_profile;
  bool ctc_brute = false;
  cmd_ct->add_option("--profile", ctc_profile, "Profile p1,p2,p3,a,b,c")->required()
      ->delimiter(',')->expected(6);
  cmd_ct->add_flag("--brute-force", ctc_brute, "Enumerate instead of using the closed form");

  // theta
  auto* cmd_theta = app.add_subcommand("theta", "Apply the bijection to a JSON file");
  auto* cmd_fwd = cmd_theta->add_subcommand("forward", "Partitioned cactus -> image tuple");
  auto* cmd_inv = cmd_theta->add_subcommand("inverse", "Image tuple -> partitioned cactus");
  cmd_theta->require_subcommand(1);
  std::string th_in = "-", th_out = "-";
  for (auto* sub : {cmd_fwd, cmd_inv}) {
    sub->add_option("--input", th_in, "Input path or -")->required();
    sub->add_option("--output", th_out, "Output path or -");
  }

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
  std::string v_suite;
  int v_max_n = 4;
  cmd_verify->add_option("suite", v_suite, "theorem1|bijection|ct|jackson|all")->required()
      ->check(CLI::IsMember({"theorem1", "bijection", "ct", "jackson", "all"}));
  cmd_verify->add_option("--max-n", v_max_n, "Largest size to verify")->check(CLI::PositiveNumber);

  // export-dot
  auto* cmd_dot = app.add_subcommand("export-dot", "DOT graph of a partitioned cactus");
  std::string dot_in = "-";
  cmd_dot->add_option("--input", dot_in, "Input path or -")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    int limit = enumeration_limit(force);
    if (cmd_count_m->parsed()) {
      cactus3::MTable table = cactus3::m_bruteforce(cm_n, jobs, limit);
      if (cm_format == "csv") {
        std::cout << table.to_csv();
      } else {
        json rows = json::array();
        for (const auto& [key, count] : table.counts)
          rows.push_back({{"n1", key[0]}, {"n2", key[1]}, {"n3", key[2]},
                          {"count", count.get_str()}});
        json out{{"n", table.n}, {"counts", rows}};
        std::cout << out.dump(2) << "\n";
      }
      return kExitPass;
    }
    if (cmd_count->parsed()) {
      mpz_class value;
      if (ct_method == "formula") {
        value = cactus3::i_count_formula(ct_p[0], ct_p[1], ct_p[2], ct_n);
      } else if (ct_method == "symmetric") {
        value = cactus3::jackson_symmetric(ct_p[0], ct_p[1], ct_p[2], ct_n);
      } else if (ct_method == "stirling") {
        value = cactus3::cc_count_stirling(ct_p[0], ct_p[1], ct_p[2], ct_n, nullptr, jobs,
                                           limit);
      } else {
        long count = 0;
        cactus3::enumerate_cc(ct_p[0], ct_p[1], ct_p[2], ct_n,
                              [&](const PartitionedCactus&) { ++count; }, limit);
        value = count;
      }
      std::cout << value.get_str() << "\n";
      return kExitPass;
    }
    if (cmd_ct->parsed()) {
      TreeProfile pr{ctc_profile[0], ctc_profile[1], ctc_profile[2],
                     ctc_profile[3], ctc_profile[4], ctc_profile[5]};
      if (pr.p1 < 1 || pr.p2 < 1 || pr.p3 < 1)
        throw CLI::ValidationError("--profile", "vertex counts must be >= 1");
      mpz_class value = ctc_brute
          ? mpz_class(static_cast<long>(cactus3::enumerate_ct(
                pr, force ? INT_MAX : cactus3::kDefaultTreeLimit).size()))
          : cactus3::ct_count_formula(pr);
      std::cout << value.get_str() << "\n";
      return kExitPass;
    }
    if (cmd_theta->parsed()) {
      json input = parse_json(read_input(th_in));
      json output;
      if (cmd_fwd->parsed()) {
        output = cactus3::tuple_to_json(cactus3::theta_forward(cactus3::pc_from_json(input)));
      } else {
        output = cactus3::pc_to_json(cactus3::theta_inverse(cactus3::tuple_from_json(input)));
      }
      write_output(th_out, output.dump(2) + "\n");
      return kExitPass;
    }
    if (cmd_dot->parsed()) {
      PartitionedCactus pc = cactus3::pc_from_json(parse_json(read_input(dot_in)));
      std::cout << cactus3::export_dot(
          cactus3::FactorTriple{pc.n, pc.alpha1, pc.alpha2, pc.alpha3});
      return kExitPass;
    }
    if (cmd_verify->parsed()) {
      VerifyStats st;
      if (v_suite == "theorem1" || v_suite == "all")
        verify_theorem1(v_max_n, jobs, limit, st);
      if (st.pass && (v_suite == "bijection" || v_suite == "all"))
        verify_bijection(v_max_n, limit, st);
      if (st.pass && (v_suite == "ct" || v_suite == "all"))
        verify_ct(v_max_n + 2, st);
      if (st.pass && (v_suite == "jackson" || v_suite == "all"))
        verify_jackson(std::max(v_max_n, 10), st);
      if (!st.pass) {
        std::cout << "FAIL: " << st.counterexample << "\n";
        return kExitFail;
      }
      std::cout << "all checks passed (" << st.checks << " identities)\n";
      return kExitPass;
    }
  } catch (const cactus3::LimitExceeded& e) {
    std::cerr << "error: " << e.what() << " (use --force or CACTUS3_MAX_N to override)\n";
    return kExitLimit;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
