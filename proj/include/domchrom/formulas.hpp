#pragma once

namespace domchrom {

// Closed forms for chi_dom of named families. Each throws DomainError outside
// the range where the closed form is valid.

/// P_n, n >= 2: n/2 when 4 | n, floor(n/2) + 1 otherwise (n = 2 gives 2).
int formula_path(int n);

/// C_n, n >= 4. Same expression as the path; the triangle is excluded because
/// chi_dom(K_3) = 3 while the expression gives 2.
int formula_cycle(int n);

/// The raw path/cycle expression with no domain check (used to report the n = 3 gap).
int path_cycle_expression(int n);

/// K_n, n >= 2.
int formula_complete(int n);

/// Star on n vertices, n >= 2.
int formula_star(int n);

/// W_n with n rim vertices, n >= 3: chi(W_n), i.e. 4 for odd rims and 3 for even ones.
int formula_wheel(int n);

}  // namespace domchrom
