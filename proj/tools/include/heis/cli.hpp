#pragma once

#include "heis/diagram.hpp"
#include "heis/heisenberg.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace heis::cli {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, size_t pos) : std::invalid_argument(msg), position(pos) {}
  size_t position;  // 0-based offset into the input
};

// Grammar: p<k> q<k> a<k> a-<k> tp<k> t integers, + - * ^ ( ); juxtaposition multiplies.
NCPoly parse_expr(const std::string& text);
// Message with the input echoed and a caret under the offending position.
std::string describe(const ParseError& e, const std::string& text);

Diagram diagram_from_json(const nlohmann::json& j);
nlohmann::json diagram_to_json(const Diagram& d);
// Accepts a single diagram or {"terms": [{"coeff": "1/2", "diagram": {...}}, ...]}.
DiagLin diaglin_from_json(const nlohmann::json& j);
nlohmann::json diaglin_to_json(const DiagLin& x);

nlohmann::json report_to_json(const Report& r);

// Runs one command line (without the program name). Returns the process exit code:
// 0 all checks pass, 1 a verification failed, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heis::cli
