#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trapps::cli {

struct TableCheck {
  std::string label;
  double got = 0.0;
  double ref = 0.0;
  double tol = 0.0; // absolute
  bool pass = false;
};

struct Report {
  std::string title;
  std::vector<TableCheck> checks;
  double elapsed_s = 0.0;

  bool pass() const;
};

// published-value cross checks; each runs the full pipeline and compares
// against the reference digits embedded here
Report reproduce_table1(); // bound levels vs basis size, parameter-spectrum method
Report reproduce_table2(); // three-method comparison at N = 50
Report reproduce_table3(); // bound + resonances over ell = 0..3, complex scaling

void print_report(const Report& rep, std::ostream& out);

} // namespace trapps::cli
