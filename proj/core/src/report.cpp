#include "heis/report.hpp"

#include <algorithm>

namespace heis {

Report Report::ok(std::string id, std::string value) {
  return Report{std::move(id), true, std::move(value), {}};
}

Report Report::fail(std::string id, std::vector<std::string> residual, std::string value) {
  return Report{std::move(id), false, std::move(value), std::move(residual)};
}

bool all_pass(const std::vector<Report>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const Report& r) { return r.pass; });
}

}  // namespace heis
