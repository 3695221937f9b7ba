#pragma once

#include <string>
#include <vector>

namespace heis {

// Outcome of one mechanical check.
struct Report {
  std::string id;
  bool pass = false;
  std::string value;                        // rendering of the computed quantity, if any
  std::vector<std::string> residual_terms;  // nonzero terms of lhs - rhs on failure

  static Report ok(std::string id, std::string value = {});
  static Report fail(std::string id, std::vector<std::string> residual, std::string value = {});
};

bool all_pass(const std::vector<Report>& rs);

}  // namespace heis
