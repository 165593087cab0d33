#pragma once

#include <functional>
#include <string>
#include <vector>

namespace wbf {

struct CheckRow {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Reference example table: each row recomputes a known b-function, initial
// ideal, annihilator or fan and compares it exactly with the tabulated value.
// on_row (optional) is called as soon as each row finishes.
std::vector<CheckRow> run_reference_suite(const std::function<void(const CheckRow&)>& on_row = {});

}  // namespace wbf
