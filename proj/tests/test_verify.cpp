#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qtsym/creationops.hpp"
#include "qtsym/verify.hpp"

using namespace qtsym;

TEST_CASE("catalog lists every check once") {
  const auto& ids = check_ids();
  CHECK(ids.size() == 19);
  for (const char* id :
       {"en_sum_C", "hook_schur", "enk_partition_form", "enk_composition_form",
        "enk_recurrence", "B_to_C", "C_to_B", "doff_inversion", "q1_B", "q1_C",
        "conj_B_scalar", "conj_C_scalar", "conj_B_monomial", "conj_C_monomial",
        "qt_catalan", "BC_relation", "op_commutations", "S_expansion",
        "HL_specialization"})
    CHECK(std::count(ids.begin(), ids.end(), std::string(id)) == 1);
}

TEST_CASE("unknown ids are rejected") {
  CHECK_THROWS_AS(run_check("no_such_check", 3), std::invalid_argument);
}

TEST_CASE("single checks pass on small ranges") {
  CheckReport r = run_check("en_sum_C", 4);
  CHECK(r.status == CheckReport::Status::pass);
  CHECK(r.instances == 4);
  CHECK(r.witnesses.empty());

  CheckReport qt = run_check("qt_catalan", 3);
  CHECK(qt.status == CheckReport::Status::pass);

  CheckReport c1 = run_check("conj_C_scalar", 1);
  CHECK(c1.status == CheckReport::Status::pass);
  CHECK(c1.instances == 1);
}

TEST_CASE("selected-suite run covers the tiny range") {
  auto reports = run_suite(2, {"B_to_C"});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].check_id == "B_to_C");
  CHECK(reports[0].status == CheckReport::Status::pass);
  CHECK(reports[0].instances == 3);  // [1,1], [2] at n=2 plus [1] at n=1
}

TEST_CASE("full suite passes at n_max 3 and reports are ordered") {
  auto reports = run_suite(3);
  CHECK(reports.size() == check_ids().size() + 1);  // + equivalence report
  bool saw_equiv = false;
  for (const auto& r : reports) {
    INFO(r.check_id);
    CHECK(r.status == CheckReport::Status::pass);
    CHECK(r.instances > 0);
    if (r.check_id == "conj_scalar_equivalence") saw_equiv = true;
  }
  CHECK(saw_equiv);
  CHECK(std::is_sorted(reports.begin(), reports.end(),
                       [](const CheckReport& a, const CheckReport& b) {
                         return a.check_id < b.check_id;
                       }));
}

TEST_CASE("witness machinery reports an injected defect") {
  // Perturb one C coefficient: the sum over compositions stops matching e_n.
  int n = 3;
  SymFunc sum;
  for (const Composition& alpha : compositions_of(n)) sum = sum + build_C(alpha);
  SymFunc perturbed = sum + SymFunc::schur(Partition({2, 1})) * Scalar::q();
  auto clean = diff_witness(SymFunc::elementary(n), sum);
  CHECK(!clean.has_value());
  auto witness = diff_witness(SymFunc::elementary(n), perturbed);
  REQUIRE(witness.has_value());
  CHECK(witness->find("lhs") != std::string::npos);
  CHECK(witness->find("rhs") != std::string::npos);

  auto scalar_witness = diff_witness(Scalar::one(), Scalar::q());
  REQUIRE(scalar_witness.has_value());
  CHECK(*scalar_witness == "lhs = 1 ; rhs = q");
}

TEST_CASE("reports carry elapsed time and notes") {
  CheckReport r = run_check("conj_B_monomial", 2);
  CHECK(r.status == CheckReport::Status::pass);
  CHECK(r.note.find("conjecture") != std::string::npos);
  CHECK(r.elapsed.count() >= 0);
}
