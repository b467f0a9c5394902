#pragma once

#include "tcat/ergodic.hpp"
#include "tcat/functors.hpp"
#include "tcat/induction.hpp"

namespace tcat {

// One verification item inside a named suite.
struct CheckLine {
  std::string suite, item;
  bool pass = false;
  bool skipped = false;
  std::string detail;  // the identity being checked, in words
};

// Flat list of check lines; a suite passes when every non-skipped line does.
struct SuiteReport {
  std::vector<CheckLine> lines;

  void add(const std::string& suite, const std::string& item, bool ok,
           const std::string& detail = "");
  void skip(const std::string& suite, const std::string& item,
            const std::string& why);
  void merge(const SuiteReport& o);
  bool pass() const;
  int failures() const;
  std::string text() const;
};

// Shared exemplar contexts over the S3 > A3 pair: tau is the forgetful
// functor on Rep(S3); mu is the restriction to A3, or the spectral functor
// of the quotient (minimal functor after restriction).
const InductionContext& restriction_context();
const InductionContext& spectral_context();
InductionContext tl_context(const Scalar& d, const FMatrix& f, int n_max = 4);

// Named verification suites.  Each builds its own exemplars and returns a
// per-identity report; tolerances other than eps are pinned inside.
SuiteReport suite_conjugates(double eps);
SuiteReport suite_quasitensor(double eps, unsigned seed = 1,
                              int min_corpus = 20);
SuiteReport suite_appendix(double eps);
SuiteReport suite_positivity(double eps, int min_corpus = 10);
SuiteReport suite_swan(double eps);
SuiteReport suite_left_action(double eps);
SuiteReport suite_fullness(double eps);
SuiteReport suite_ind_hom(int max_len = 3);
SuiteReport suite_multiplication(double eps);
SuiteReport suite_frobenius();
SuiteReport suite_eigenmatrix(double eps);
SuiteReport suite_translation(double eps);
SuiteReport suite_su2(const std::vector<int>& rs);
SuiteReport suite_evaluation(double eps);

// Temperley-Lieb variants parameterized by the embedding data.
SuiteReport suite_admissibility(const Scalar& d, const FMatrix& f, double eps);
SuiteReport suite_tl_conjugates(const Scalar& d, const FMatrix& f, double eps);
SuiteReport suite_tl_appendix(const Scalar& d, const FMatrix& f, double eps);

std::vector<std::string> suite_names();
// Dispatch by name with the default exemplars (TL at d = 2 with the
// pseudoreal F, SU(2) levels 1..5).  Throws Error("UnknownSuite").
SuiteReport run_suite(const std::string& name, double eps, unsigned seed = 1);

}  // namespace tcat
