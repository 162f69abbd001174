// Acceptance suite: runs every verification criterion at its stated
// tolerance and prints one pass/fail line per criterion. Exits nonzero if
// any criterion fails. `acceptance <id>` runs a single criterion.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "strata/selftest.hpp"

namespace {

void print(const strata::selftest::CriterionResult& r) {
    std::printf("[%2d] %s  %-58s (%8.1f ms / %6.0f ms)%s%s\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.elapsed_ms, r.limit_ms, r.detail.empty() ? "" : "  ", r.detail.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    using namespace strata::selftest;

    if (argc > 1) {
        const int id = std::atoi(argv[1]);
        CriterionResult (*criteria[])() = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                                           criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};
        if (id < 1 || id > 10) {
            std::fprintf(stderr, "usage: acceptance [1-10]\n");
            return 2;
        }
        const CriterionResult r = criteria[id - 1]();
        print(r);
        return r.pass ? 0 : 1;
    }

    bool all_pass = true;
    for (const CriterionResult& r : run_all()) {
        print(r);
        all_pass = all_pass && r.pass;
    }
    std::printf("%s\n", all_pass ? "acceptance: all criteria passed" : "acceptance: FAILURES");
    return all_pass ? 0 : 1;
}
