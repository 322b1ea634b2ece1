// Command dispatch over a loaded document.  Every command produces a JSON
// report with a stable field order; the theorem-suite command re-checks the
// library's invariant catalog against every object in the document.
#pragma once

#include "change_of_groups.hpp"
#include "fixture.hpp"

#include <json.hpp>

namespace nabelh1 {

struct CommandOptions {
  std::string object;              // empty = every eligible object
  bool continuous_only = true;
  std::optional<std::uint64_t> size_cap;
  std::optional<ElemSet> subgroup;  // for inf-res; validated indices
};

// Commands: validate, h0, h1, h2, inn, zeta, group-structure, inf-res,
// seven-term, torsors, torsor-product, theorem-suite.
// Throws ValidationError("UnknownCommand") for anything else; computation
// errors propagate as the library throws them.
nlohmann::ordered_json run_command(const Document& doc, const std::string& command,
                                   const CommandOptions& opts);

}  // namespace nabelh1
