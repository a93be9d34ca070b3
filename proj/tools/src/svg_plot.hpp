#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace niggli::cli {

struct Bar {
  std::string label;
  double value = 0;
};

// Log-scale bar chart, one bar per entry in the given order.
void write_log_bar_chart(std::ostream& os, const std::vector<Bar>& bars,
                         const std::string& title);

}  // namespace niggli::cli
