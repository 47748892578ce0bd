#include "domchrom/formulas.hpp"

#include <string>

#include "domchrom/error.hpp"

namespace domchrom {

namespace {

void require(bool ok, const char* family, int n, const char* domain) {
    if (!ok) {
        throw DomainError(std::string(family) + " formula undefined at n = " + std::to_string(n) + " (needs " +
                          domain + ")");
    }
}

}  // namespace

int path_cycle_expression(int n) { return n % 4 == 0 ? n / 2 : n / 2 + 1; }

int formula_path(int n) {
    require(n >= 2, "path", n, "n >= 2");
    return path_cycle_expression(n);
}

int formula_cycle(int n) {
    require(n >= 4, "cycle", n, "n >= 4");
    return path_cycle_expression(n);
}

int formula_complete(int n) {
    require(n >= 2, "complete", n, "n >= 2");
    return n;
}

int formula_star(int n) {
    require(n >= 2, "star", n, "n >= 2");
    return 2;
}

int formula_wheel(int n) {
    require(n >= 3, "wheel", n, "n >= 3");
    return n % 2 == 1 ? 4 : 3;
}

}  // namespace domchrom
