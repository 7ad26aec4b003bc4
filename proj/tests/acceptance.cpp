#include "torus/acceptance.hpp"

#include <cstdio>

int main() {
    bool all = true;
    for (auto& r : torus::run_acceptance(7)) {
        std::printf("%s %d %s: %s [%.2f s]\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.detail.c_str(), r.seconds);
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
