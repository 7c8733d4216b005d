#include "idealkit/simplex.hpp"

#include <stdexcept>

namespace idealkit {

// Phase-1 simplex: minimize the sum of artificial variables for
// A x = b, x >= 0.  Bland's rule guarantees termination.
std::optional<std::vector<Q>> solve_feasibility(
    const std::vector<std::vector<Q>>& A, const std::vector<Q>& b) {
  const int rows = static_cast<int>(A.size());
  const int cols = rows ? static_cast<int>(A[0].size()) : 0;
  if (rows == 0) return std::vector<Q>(cols, Q(0));

  // Tableau: [A | I | b], one artificial variable per row, b made >= 0.
  const int total = cols + rows;
  std::vector<std::vector<Q>> t(rows, std::vector<Q>(total + 1, Q(0)));
  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) {
    bool flip = b[i] < 0;
    for (int j = 0; j < cols; ++j) t[i][j] = flip ? Q(-A[i][j]) : A[i][j];
    t[i][total] = flip ? Q(-b[i]) : b[i];
    t[i][cols + i] = 1;
    basis[i] = cols + i;
  }

  // Objective row: cost of artificials, expressed through the basis.
  std::vector<Q> obj(total + 1, Q(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j <= total; ++j) obj[j] += t[i][j];
  for (int i = 0; i < rows; ++i) obj[cols + i] = 0;

  auto pivot = [&](int pr, int pc) {
    Q pv = t[pr][pc];
    for (int j = 0; j <= total; ++j) t[pr][j] /= pv;
    for (int i = 0; i < rows; ++i) {
      if (i == pr || t[i][pc] == 0) continue;
      Q f = t[i][pc];
      for (int j = 0; j <= total; ++j) t[i][j] -= f * t[pr][j];
    }
    if (obj[pc] != 0) {
      Q f = obj[pc];
      for (int j = 0; j <= total; ++j) obj[j] -= f * t[pr][j];
    }
    basis[pr] = pc;
  };

  while (true) {
    int pc = -1;  // Bland: lowest index with positive reduced cost
    for (int j = 0; j < total; ++j)
      if (obj[j] > 0) { pc = j; break; }
    if (pc < 0) break;
    int pr = -1;
    for (int i = 0; i < rows; ++i) {
      if (t[i][pc] <= 0) continue;
      if (pr < 0) { pr = i; continue; }
      Q lhs = t[i][total] * t[pr][pc];
      Q rhs = t[pr][total] * t[i][pc];
      if (lhs < rhs || (lhs == rhs && basis[i] < basis[pr])) pr = i;
    }
    if (pr < 0) throw std::logic_error("phase-1 objective unbounded");
    pivot(pr, pc);
  }

  if (obj[total] != 0) return std::nullopt;  // artificials can't vanish

  // Drive any artificial still in the basis out (its value is 0).
  for (int i = 0; i < rows; ++i) {
    if (basis[i] < cols) continue;
    int pc = -1;
    for (int j = 0; j < cols; ++j)
      if (t[i][j] != 0) { pc = j; break; }
    if (pc >= 0) pivot(i, pc);
    // else the row is redundant; the artificial stays basic at value 0
  }

  std::vector<Q> x(cols, Q(0));
  for (int i = 0; i < rows; ++i)
    if (basis[i] < cols) x[basis[i]] = t[i][total];
  return x;
}

}  // namespace idealkit
