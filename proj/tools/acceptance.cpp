// Acceptance runner: one pass/fail line per criterion.  Tolerances are
// pinned here; everything scalar-valued runs in exact arithmetic and the
// eps only guards the few floating fallbacks.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tcat/suites.hpp"

using namespace tcat;

int main() {
  const double eps = 1e-12;  // pinned; PSD bound of -1e-10 sits in-suite

  std::vector<std::pair<std::string, std::function<SuiteReport()>>> criteria =
      {
          {"conjugate equations and intrinsic dimensions",
           [&] { return suite_conjugates(eps); }},
          {"quasitensor axioms on sampled corpora",
           [&] { return suite_quasitensor(eps, 1, 20); }},
          {"conjugation identities for functor images",
           [&] { return suite_appendix(eps); }},
          {"positivity of the spectral inner product",
           [&] { return suite_positivity(eps, 10); }},
          {"free modules and vanishing non-spectral bimodules",
           [&] { return suite_swan(eps); }},
          {"left-action matrix elements and the quotient formula",
           [&] { return suite_left_action(eps); }},
          {"fixed vectors central, module maps are bimodule maps",
           [&] { return suite_fullness(eps); }},
          {"induction hom dimensions, sequences up to length 3",
           [&] { return suite_ind_hom(3); }},
          {"multiplication map unitary and onto",
           [&] { return suite_multiplication(eps); }},
          {"Frobenius reciprocity for restriction and induction",
           [&] { return suite_frobenius(); }},
          {"eigenmatrices of the Weyl pair action",
           [&] { return suite_eigenmatrix(eps); }},
          {"translation identity of induced systems, per element",
           [&] { return suite_translation(eps); }},
          {"symbolic SU(2) adjoint analysis, levels 1..5",
           [&] { return suite_su2({1, 2, 3, 4, 5}); }},
          {"evaluation functor round trip and tensoriality",
           [&] { return suite_evaluation(eps); }},
      };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    SuiteReport rep;
    std::string note;
    try {
      rep = criteria[i].second();
    } catch (const std::exception& e) {
      rep.add("criterion", "uncaught error", false, e.what());
    }
    bool ok = rep.pass();
    if (!ok) ++failed;
    std::printf("criterion %2zu: %-55s %s\n", i + 1,
                criteria[i].first.c_str(), ok ? "PASS" : "FAIL");
    if (!ok)
      for (auto& l : rep.lines)
        if (!l.skipped && !l.pass)
          std::printf("              failed: %s :: %s\n", l.suite.c_str(),
                      l.item.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) -
              failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
