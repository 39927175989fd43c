// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <string>

#include "ordalg/verify.hpp"

namespace {

int failures = 0;

void report(int number, const char* label, const ordalg::VerifyResult& r) {
  if (r.ok) {
    std::printf("PASS %2d %s (%zu checks)\n", number, label, r.checks);
  } else {
    std::printf("FAIL %2d %s: %s\n", number, label, r.failure.c_str());
    ++failures;
  }
}

}  // namespace

int main() {
  using namespace ordalg;
  report(1, "star_S equals the weak-order interval sum, p+q <= 6", verify_thm_4_1(6));
  report(2, "star_Y equals the tree-order interval sum, p+q <= 8", verify_thm_5_1(8));
  report(3, "star_Q is the two-element boolean interval, p+q <= 10", verify_thm_6_1(10));
  report(4, "psi-fibers are the intervals [Min, Max] and partition S_n, n <= 7",
         verify_thm_2_5(7));
  report(5, "phi-fibers are the tree intervals [min, max] and partition Y_n, n <= 8",
         verify_prop_3_5(8));
  report(6, "dendriform axioms hold in Q[S] and Q[Y], total degree <= 6", verify_prop_4_5(6));
  report(7, "interval forms of prec and succ match the shuffle forms, p+q <= 6",
         verify_prop_4_6(6));
  report(8, "psi* preserves *, prec, succ; phi* preserves *, p+q <= 6", verify_prop_5_3(6));
  report(9, "psi sends over/under to over/under, p+q <= 6", verify_thm_2_9(6));
  {
    VerifyResult a2 = verify_prop_a_2(5);
    VerifyResult a4 = verify_cor_a_4(5);
    VerifyResult both;
    both.ok = a2.ok && a4.ok;
    both.checks = a2.checks + a4.checks;
    both.failure = a2.ok ? a4.failure : a2.failure;
    report(10, "parabolic factorization and lower-set identity on S_n (n<=5), B_3, I2(m<=12)",
           both);
  }
  report(11, "shuffle binomials (p+q <= 8), Catalan counts (n <= 10), length(xi) = pq",
         verify_counts(8, 10));
  report(12, "worked example: 341625 splits as (231) and (12) under the maximum",
         verify_worked_example());
  return failures == 0 ? 0 : 1;
}
