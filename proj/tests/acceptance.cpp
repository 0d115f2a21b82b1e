// Acceptance gate: one check per criterion, each printed as a PASS/FAIL
// line with its runtime.  Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "stvb/schreier.hpp"
#include "stvb/verify.hpp"

using namespace stvb;

namespace {

struct Criterion {
  std::string name;
  double time_limit_s;
  std::function<bool(std::string&)> run;
};

bool suite_green(const VerificationReport& r, std::string& detail) {
  if (r.all_pass()) return true;
  for (const ReportItem& item : r.items) {
    if (item.verdict != "pass") {
      detail += " [" + r.suite + "/" + r.family + " n=" + std::to_string(r.n) + ": "
              + item.label + " " + item.indices + " " + item.model + " -> " + item.verdict
              + (item.witness.is_null() ? "" : " " + item.witness.dump()) + "]";
      return false;
    }
  }
  return false;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({"1 presentation well-definedness (images + invariants)", 10.0,
                      [](std::string& detail) {
                        bool ok = true;
                        for (int n = 2; n <= 5; ++n) {
                          for (Family f : {Family::stvb_full, Family::tvb, Family::stvg}) {
                            ok &= suite_green(verify_presentation_under_images(f, n), detail);
                          }
                        }
                        ok &= suite_green(
                            verify_presentation_under_images(Family::stvb_reduced, 5), detail);
                        return ok;
                      }});

  criteria.push_back({"2 transversal correctness (|Lambda_n| = n!, bijective images)", 1.0,
                      [](std::string& detail) {
                        std::size_t factorial = 1;
                        for (int n = 2; n <= 6; ++n) {
                          factorial *= n;
                          Transversal t(n);
                          if (t.elements().size() != factorial) {
                            detail = " [wrong size at n=" + std::to_string(n) + "]";
                            return false;
                          }
                          std::set<std::string> images;
                          for (const auto& el : t.elements()) {
                            images.insert(el.image.one_line());
                          }
                          if (images.size() != factorial) {
                            detail = " [images not distinct at n=" + std::to_string(n) + "]";
                            return false;
                          }
                        }
                        return true;
                      }});

  criteria.push_back({"3 golden derivations r1e / r2e token-exact at n=4", 1.0,
                      [](std::string& detail) {
                        VerificationReport r = verify_schreier_golden(4);
                        bool ok = suite_green(r, detail);
                        std::set<std::string> labels;
                        for (const ReportItem& item : r.items) labels.insert(item.label);
                        for (const char* want :
                             {"r1e-lhs", "r1e-rhs", "r2e-lhs", "r2e-rhs"}) {
                          if (!labels.count(want)) {
                            detail += std::string(" [missing ") + want + "]";
                            ok = false;
                          }
                        }
                        return ok;
                      }});

  criteria.push_back({"4 symbolic Phi_{a,b,c} on all STVB relations, n=2..4", 60.0,
                      [](std::string& detail) {
                        bool ok = true;
                        for (int n = 2; n <= 4; ++n) {
                          ok &= suite_green(verify_phi_abc(n, make_canonical_rep(n)), detail);
                        }
                        VerificationReport r4 = verify_phi_abc(4, make_canonical_rep(4));
                        std::set<std::string> models;
                        for (const ReportItem& item : r4.items) {
                          if (item.verdict == "pass") models.insert(item.model);
                        }
                        for (const char* want : {"phi-abc/4.2-i", "phi-abc/4.2-ii",
                                                 "phi-abc/4.2-iii", "phi-abc/4.2-iv"}) {
                          if (!models.count(want)) {
                            detail += std::string(" [missing passing model ") + want + "]";
                            ok = false;
                          }
                        }
                        return ok;
                      }});

  criteria.push_back({"5 submonoid expansion soundness + curated derivations", 120.0,
                      [](std::string& detail) {
                        bool ok = true;
                        std::size_t bfs_items = 0;
                        for (int n = 2; n <= 4; ++n) {
                          for (Family f : {Family::stvp, Family::stvh, Family::m,
                                           Family::stvpg}) {
                            VerificationReport r = verify_submonoid_presentation(f, n);
                            ok &= suite_green(r, detail);
                            for (const ReportItem& item : r.items) {
                              if (item.model.rfind("bfs", 0) == 0) ++bfs_items;
                            }
                          }
                        }
                        ok &= suite_green(verify_reduction_formulas(4), detail);
                        if (bfs_items == 0) {
                          detail += " [no curated bfs items ran]";
                          ok = false;
                        }
                        return ok;
                      }});

  criteria.push_back({"6 conjugation action vs literal conjugation, n=3,4", 30.0,
                      [](std::string& detail) {
                        return suite_green(verify_lemma_action(3), detail)
                            && suite_green(verify_lemma_action(4), detail);
                      }});

  criteria.push_back({"7 round-trip fuzzing (1000 phi1 + 500 phi2 + 500 phi3, n=3)", 120.0,
                      [](std::string& detail) {
                        return suite_green(fuzz_roundtrip(3, 1000, 20, 0, Hom::phi1), detail)
                            && suite_green(fuzz_roundtrip(3, 500, 20, 0, Hom::phi2), detail)
                            && suite_green(fuzz_roundtrip(3, 500, 20, 0, Hom::phi3), detail);
                      }});

  criteria.push_back({"8 negative controls: every mutation detected", 30.0,
                      [](std::string& detail) {
                        VerificationReport r = verify_negative_controls();
                        return suite_green(r, detail) && r.items.size() == 3;
                      }});

  int failures = 0;
  for (Criterion& c : criteria) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail += std::string(" [exception: ") + e.what() + "]";
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.time_limit_s) {
      detail += " [over time limit " + std::to_string(c.time_limit_s) + "s]";
      ok = false;
    }
    std::printf("[%s] criterion %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", c.name.c_str(),
                elapsed, detail.c_str());
    if (!ok) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu acceptance criteria passed\n", criteria.size());
  return 0;
}
