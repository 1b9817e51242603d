// qtsym command line front end.
//
// Verbs:
//   expand  <family> <index...>    print B/C/Qp/E family members in any basis
//   nabla   <family> <index...>    apply nabla, optionally pair against e_k/h_k/s[..]
//   paths   <n>                    enumerate Dyck paths with statistics (TSV)
//   table   <name> <n>             named scalar tables (nabla-catalan)
//   verify  [--nmax N]             run the identity catalog
//   macd    <n>                    dump the modified Macdonald table
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtsym/creationops.hpp"
#include "qtsym/dyck.hpp"
#include "qtsym/macdonald.hpp"
#include "qtsym/verify.hpp"

using json = nlohmann::json;
using namespace qtsym;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_small_int(const std::string& s, int lo, int hi, const char* what) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    if (v < lo || v > hi)
      throw UsageError(std::string(what) + " must be in [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
    return static_cast<int>(v);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError(std::string("cannot parse ") + what + ": '" + s + "'");
  }
}

json symfunc_json(const SymFunc& f) {
  json terms = json::array();
  for (const auto& [shape, coeff] : f.dump())
    terms.push_back({{"shape", shape.parts()}, {"coeff", coeff}});
  return {{"basis", std::string(1, basis_to_char(f.basis()))}, {"terms", terms}};
}

// Shared size guards: degrees past these make exact runs unreasonably long.
constexpr int kMaxExpandSize = 10;
constexpr int kMaxNablaSize = 8;
constexpr int kMaxMacdSize = 8;
constexpr int kMaxPathsSize = 12;
constexpr int kMaxVerifySize = 7;

SymFunc family_member(const std::string& family, const std::vector<std::string>& index,
                      int max_size) {
  if (family == "B" || family == "C") {
    if (index.size() != 1)
      throw UsageError("family " + family + " takes one composition literal like [1,3]");
    Composition alpha = Composition::parse(index[0]);
    if (alpha.size() > max_size)
      throw UsageError("composition too large (size cap " + std::to_string(max_size) + ")");
    return family == "B" ? build_B(alpha) : build_C(alpha);
  }
  if (family == "Qp") {
    if (index.size() != 1)
      throw UsageError("family Qp takes one partition literal like [2,1]");
    Partition lambda = Partition::parse(index[0]);
    if (lambda.size() > max_size)
      throw UsageError("partition too large (size cap " + std::to_string(max_size) + ")");
    return hall_littlewood_Qp(lambda);
  }
  if (family == "E") {
    if (index.size() != 2) throw UsageError("family E takes two integers: n k");
    int n = parse_small_int(index[0], 1, max_size, "n");
    int k = parse_small_int(index[1], 1, n, "k");
    return E_nk(n, k);
  }
  if (family == "e" || family == "h") {
    if (index.size() != 1) throw UsageError("family " + family + " takes one integer");
    int n = parse_small_int(index[0], 0, max_size, "n");
    return family == "e" ? SymFunc::elementary(n) : SymFunc::homogeneous(n);
  }
  throw UsageError("unknown family '" + family + "' (expected B, C, Qp, E, e or h)");
}

SymFunc parse_pair_target(const std::string& text) {
  if (text.size() >= 2 && (text[0] == 'e' || text[0] == 'h') &&
      std::isdigit(static_cast<unsigned char>(text[1]))) {
    int n = parse_small_int(text.substr(1), 0, kMaxNablaSize, "pair degree");
    return text[0] == 'e' ? SymFunc::elementary(n) : SymFunc::homogeneous(n);
  }
  if (text.size() >= 2 && text[1] == '[') {
    Basis b = basis_from_char(text[0]);
    return SymFunc::basis_element(b, Partition::parse(text.substr(1)));
  }
  throw UsageError("cannot parse pairing target '" + text + "' (try e3, h4 or s[2,1])");
}

int cmd_expand(const std::string& family, const std::vector<std::string>& index,
               const std::string& basis, const std::string& format) {
  SymFunc f = convert(family_member(family, index, kMaxExpandSize), basis_from_char(basis[0]));
  if (format == "json") {
    std::cout << symfunc_json(f).dump() << "\n";
  } else {
    std::cout << f.to_string() << "\n";
  }
  return 0;
}

int cmd_nabla(const std::string& family, const std::vector<std::string>& index,
              const std::string& pair, bool q1, const std::string& basis,
              const std::string& format) {
  SymFunc f = family_member(family, index, kMaxNablaSize);
  SymFunc nf = q1 ? nabla_q1(f) : nabla(f);
  if (!pair.empty()) {
    Scalar value = hall_inner(nf, parse_pair_target(pair));
    if (format == "json") {
      std::cout << json{{"pairing", value.to_string()}}.dump() << "\n";
    } else {
      std::cout << value.to_string() << "\n";
    }
    return 0;
  }
  SymFunc out = convert(nf, basis_from_char(basis[0]));
  if (format == "json") {
    std::cout << symfunc_json(out).dump() << "\n";
  } else {
    std::cout << out.to_string() << "\n";
  }
  return 0;
}

int cmd_paths(int n, const std::string& touch, const std::string& below,
              const std::string& doff_against, const std::string& format) {
  if (!touch.empty() && !below.empty())
    throw UsageError("--touch and --below are mutually exclusive");
  std::vector<DyckPath> paths;
  std::string alpha_text = !doff_against.empty() ? doff_against
                           : !touch.empty()      ? touch
                           : !below.empty()      ? below
                                                 : "";
  if (!touch.empty()) {
    Composition alpha = Composition::parse(touch);
    if (alpha.size() != n) throw UsageError("--touch composition must have size n");
    paths = paths_with_touch(alpha);
  } else if (!below.empty()) {
    Composition alpha = Composition::parse(below);
    if (alpha.size() != n) throw UsageError("--below composition must have size n");
    paths = paths_below(alpha);
  } else {
    paths = all_paths(n);
  }

  std::optional<Composition> alpha;
  if (!alpha_text.empty()) {
    alpha = Composition::parse(alpha_text);
    if (alpha->size() != n) throw UsageError("doff composition must have size n");
  }

  if (format == "json") {
    json rows = json::array();
    for (const DyckPath& d : paths) {
      json row = {{"arm", d.arm()},
                  {"area", d.area()},
                  {"dinv", d.dinv()},
                  {"touch", d.touch().parts()}};
      if (alpha) row["doff"] = doff(*alpha, d);
      rows.push_back(std::move(row));
    }
    std::cout << rows.dump() << "\n";
    return 0;
  }

  std::cout << "arm\tarea\tdinv\ttouch";
  if (alpha) std::cout << "\tdoff_" << alpha->to_string();
  std::cout << "\n";
  for (const DyckPath& d : paths) {
    std::cout << d.to_string() << "\t" << d.area() << "\t" << d.dinv() << "\t"
              << d.touch().to_string();
    if (alpha) std::cout << "\t" << doff(*alpha, d);
    std::cout << "\n";
  }
  return 0;
}

int cmd_table(const std::string& name, int n, const std::string& format) {
  if (name == "nabla-catalan") {
    Scalar value = hall_inner(nabla(SymFunc::elementary(n)), SymFunc::elementary(n));
    if (format == "json") {
      std::cout << json{{"n", n}, {"value", value.to_string()}}.dump() << "\n";
    } else {
      std::cout << value.to_string() << "\n";
    }
    return 0;
  }
  throw UsageError("unknown table '" + name + "' (available: nabla-catalan)");
}

int cmd_verify(int n_max, const std::string& only_csv, const std::string& format) {
  std::vector<std::string> only;
  if (!only_csv.empty()) {
    std::stringstream ss(only_csv);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (id.empty()) continue;
      const auto& ids = check_ids();
      if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw UsageError("unknown check id '" + id + "'");
      only.push_back(id);
    }
  }

  std::vector<CheckReport> reports = run_suite(n_max, only);
  bool any_fail = false;
  for (const CheckReport& r : reports)
    if (r.status == CheckReport::Status::fail) any_fail = true;

  if (format == "json") {
    json out = json::array();
    for (const CheckReport& r : reports) {
      out.push_back({{"check_id", r.check_id},
                     {"params", r.params},
                     {"status", status_name(r.status)},
                     {"instances", r.instances},
                     {"witnesses", r.witnesses},
                     {"elapsed_ms", r.elapsed.count()},
                     {"note", r.note}});
    }
    std::cout << out.dump() << "\n";
    return any_fail ? kExitVerifyFailure : 0;
  }

  size_t width = 0;
  for (const CheckReport& r : reports) width = std::max(width, r.check_id.size());
  long witness_width = 120;
  if (const char* hint = std::getenv("QTSYM_WIDTH")) {
    char* end = nullptr;
    long v = std::strtol(hint, &end, 10);
    if (end && *end == '\0' && v >= 40) witness_width = v;
  }
  for (const CheckReport& r : reports) {
    std::cout << r.check_id << std::string(width + 2 - r.check_id.size(), ' ')
              << status_name(r.status) << "\tinstances=" << r.instances
              << "\twitnesses=" << r.witnesses.size() << "\t" << r.elapsed.count() << "ms\t"
              << r.params << "\n";
    for (const std::string& w : r.witnesses) {
      std::string line = "    " + w;
      if (static_cast<long>(line.size()) > witness_width)
        line = line.substr(0, static_cast<size_t>(witness_width - 3)) + "...";
      std::cout << line << "\n";
    }
  }
  std::cout << (any_fail ? "FAIL" : "OK") << ": " << reports.size() << " checks\n";
  return any_fail ? kExitVerifyFailure : 0;
}

int cmd_macd(int n, const std::string& format) {
  auto table = macd_basis(n);
  const auto& parts = table->partitions();
  if (format == "json") {
    json cols = json::array();
    for (const Partition& p : parts) cols.push_back(p.parts());
    json rows = json::array();
    for (const Partition& mu : parts) {
      json row = json::array();
      for (const Partition& lambda : parts)
        row.push_back(table->row(mu).coefficient(lambda).to_string());
      rows.push_back(std::move(row));
    }
    std::cout << json{{"n", n}, {"order", cols}, {"rows", rows}}.dump() << "\n";
    return 0;
  }
  std::cout << "mu \\ lambda";
  for (const Partition& lambda : parts) std::cout << "\t" << lambda.to_string();
  std::cout << "\n";
  for (const Partition& mu : parts) {
    std::cout << mu.to_string();
    for (const Partition& lambda : parts)
      std::cout << "\t" << table->row(mu).coefficient(lambda).to_string();
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for q,t-symmetric function combinatorics"};
  app.require_subcommand(1);

  std::string basis = "s", format = "text";

  // expand
  auto* expand = app.add_subcommand("expand", "print a family member in a chosen basis");
  std::string ex_family;
  std::vector<std::string> ex_index;
  expand->add_option("family", ex_family, "B, C, Qp, E, e or h")->required();
  expand->add_option("index", ex_index, "composition/partition literal or integers")
      ->required()
      ->expected(1, 2);
  expand->add_option("--basis", basis, "p, m, e, h or s")
      ->check(CLI::IsMember({"p", "m", "e", "h", "s"}));
  expand->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // nabla
  auto* nab = app.add_subcommand("nabla", "apply nabla to a family member");
  std::string nb_family, nb_pair;
  std::vector<std::string> nb_index;
  bool nb_q1 = false;
  nab->add_option("family", nb_family, "B, C, Qp, E, e or h")->required();
  nab->add_option("index", nb_index, "composition/partition literal or integers")
      ->required()
      ->expected(1, 2);
  nab->add_option("--pair", nb_pair, "pair the result against e<k>, h<k> or s[..]");
  nab->add_flag("--q1", nb_q1, "use the q = 1 specialization of nabla");
  nab->add_option("--basis", basis, "p, m, e, h or s")
      ->check(CLI::IsMember({"p", "m", "e", "h", "s"}));
  nab->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // paths
  auto* paths = app.add_subcommand("paths", "enumerate Dyck paths with statistics");
  int pa_n = 0;
  std::string pa_touch, pa_below, pa_doff;
  paths->add_option("n", pa_n, "path size")->required()->check(CLI::Range(1, kMaxPathsSize));
  paths->add_option("--touch", pa_touch, "restrict to touch(D) = alpha, e.g. [2,3]");
  paths->add_option("--below", pa_below, "restrict to D <= DP(alpha)");
  paths->add_option("--doff", pa_doff, "also print doff against this composition");
  paths->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // table
  auto* table = app.add_subcommand("table", "print a named scalar table");
  std::string tb_name;
  int tb_n = 0;
  table->add_option("name", tb_name, "table name (nabla-catalan)")->required();
  table->add_option("n", tb_n, "size")->required()->check(CLI::Range(1, kMaxNablaSize));
  table->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run the identity catalog");
  int vf_nmax = 4;
  std::string vf_only;
  verify->add_option("--nmax", vf_nmax, "size bound (default 4)")
      ->check(CLI::Range(1, kMaxVerifySize));
  verify->add_option("--only", vf_only, "comma separated check ids");
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // macd
  auto* macd = app.add_subcommand("macd", "dump the modified Macdonald table for degree n");
  int mc_n = 0;
  macd->add_option("n", mc_n, "degree")->required()->check(CLI::Range(0, kMaxMacdSize));
  macd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (expand->parsed()) return cmd_expand(ex_family, ex_index, basis, format);
    if (nab->parsed()) return cmd_nabla(nb_family, nb_index, nb_pair, nb_q1, basis, format);
    if (paths->parsed()) return cmd_paths(pa_n, pa_touch, pa_below, pa_doff, format);
    if (table->parsed()) return cmd_table(tb_name, tb_n, format);
    if (verify->parsed()) return cmd_verify(vf_nmax, vf_only, format);
    if (macd->parsed()) return cmd_macd(mc_n, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
