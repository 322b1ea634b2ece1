// Command-line front end.  All computation goes through the C interface; this
// file only parses flags, forwards one command, and renders the JSON report.
#include "nabelh1.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

int exit_code_for(nh1_status s) {
  switch (s) {
    case NH1_OK:
      return 0;
    case NH1_ERROR_PARSE:
    case NH1_ERROR_REFERENCE:
    case NH1_ERROR_VALIDATION:
    case NH1_ERROR_BAD_ARGUMENT:
      return 2;
    default:
      return 1;  // checks failed, size guard, compute
  }
}

std::string tuple_of(const ordered_json& der) {
  std::string out = "(";
  const auto& alpha = der.at("alpha");
  out += "[";
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(alpha[i].get<int>());
  }
  out += "], r=" + std::to_string(der.at("r").get<int>()) + ")";
  return out;
}

std::string int_list(const ordered_json& arr) {
  std::string out = "[";
  for (size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(arr[i].get<int>());
  }
  return out + "]";
}

void print_table(std::ostream& os, const ordered_json& table, const char* indent) {
  for (const auto& row : table) os << indent << int_list(row) << "\n";
}

void render_validate(std::ostream& os, const ordered_json& rep) {
  os << "document is valid\n";
  for (const auto& [name, g] : rep.at("groups").items())
    os << "  group " << name << ": order " << g.at("order").get<int>() << ", open subgroup "
       << int_list(g.at("open_subgroup"))
       << (g.at("abelian").get<bool>() ? ", abelian" : "")
       << (g.at("discrete").get<bool>() ? ", discrete" : "")
       << (g.at("indiscrete").get<bool>() ? ", indiscrete" : "") << "\n";
  for (const auto& [name, m] : rep.at("maps").items())
    os << "  map " << name << ": " << m.at("domain").get<std::string>() << " -> "
       << m.at("codomain").get<std::string>()
       << (m.at("homomorphism").get<bool>() ? ", homomorphism" : "")
       << (m.at("continuous").get<bool>() ? ", continuous" : ", NOT continuous") << "\n";
  for (const auto& [name, a] : rep.at("actions").items())
    os << "  action " << name << ": " << a.at("actor").get<std::string>() << " on "
       << a.at("space").get<std::string>()
       << (a.at("continuous").get<bool>() ? ", continuous" : ", NOT continuous") << "\n";
  for (const auto& [name, b] : rep.at("bimodules").items())
    os << "  bimodule " << name << ": level " << b.at("level").get<std::string>() << "\n";
  for (const auto& [name, e] : rep.at("extensions").items())
    os << "  extension " << name << ": " << e.at("A_bim").get<std::string>() << " -> "
       << e.at("B_bim").get<std::string>() << " -> " << e.at("C_bim").get<std::string>()
       << ", section " << int_list(e.at("section")) << "\n";
  for (const auto& [name, t] : rep.at("torsors").items())
    os << "  torsor " << name << ": over " << t.at("bimodule").get<std::string>() << ", "
       << t.at("points").get<int>() << " points\n";
}

void render_h0(std::ostream& os, const ordered_json& rep) {
  for (const auto& [name, o] : rep.at("objects").items()) {
    os << name << ":\n";
    os << "  fixed module elements: " << int_list(o.at("fixed_module_elements")) << "\n";
    os << "  fixed target elements: " << int_list(o.at("fixed_target_elements")) << "\n";
  }
}

void render_h1(std::ostream& os, const ordered_json& rep) {
  for (const auto& [name, o] : rep.at("objects").items()) {
    os << name << ": " << o.at("class_count").get<int>() << " classes from "
       << o.at("derivation_pairs").get<int>() << " derivation pairs (level "
       << o.at("level").get<std::string>() << ")\n";
    int idx = 0;
    for (const auto& cl : o.at("classes")) {
      os << "  class " << idx << ": representative " << tuple_of(cl.at("representative"))
         << ", size " << cl.at("size").get<int>();
      if (idx == o.at("distinguished").get<int>()) os << "  [distinguished]";
      os << "\n";
      ++idx;
    }
  }
}

void render_h2(std::ostream& os, const ordered_json& rep) {
  for (const auto& [name, o] : rep.at("objects").items()) {
    os << name << ": " << o.at("class_count").get<int>() << " classes from "
       << o.at("cocycles").get<int>() << " normalized continuous tables\n";
    os << "  class product table:\n";
    print_table(os, o.at("table"), "    ");
  }
}

void render_inn(std::ostream& os, const ordered_json& rep) {
  for (const auto& [name, o] : rep.at("objects").items()) {
    os << name << ": " << o.at("inner_pair_count").get<int>() << " inner pairs, normal (direct) "
       << (o.at("normal_direct").get<bool>() ? "yes" : "no") << ", normal (criterion) "
       << (o.at("normal_criterion").get<bool>() ? "yes" : "no") << "\n";
    for (const auto& p : o.at("pairs")) os << "  " << tuple_of(p) << "\n";
  }
}

void render_zeta(std::ostream& os, const ordered_json& rep) {
  for (const auto& [name, o] : rep.at("objects").items()) {
    os << name << ": " << o.at("class_count").get<int>() << " classes embed into "
       << o.at("plain_class_count").get<int>() << " plain classes via " << int_list(o.at("class_map"))
       << "\n";
    os << "  injective: " << (o.at("injective").get<bool>() ? "yes" : "no")
       << ", surjective: " << (o.at("surjective").get<bool>() ? "yes" : "no")
       << ", structure-map classes trivial: "
       << (o.at("structure_map_classes_trivial").get<bool>() ? "yes" : "no") << "\n";
  }
}

void render_group_structure(std::ostream& os, const ordered_json& rep) {
  for (const auto& [name, o] : rep.at("objects").items()) {
    os << name << ": status " << o.at("status").get<std::string>() << " ("
       << o.at("class_count").get<int>() << " classes)\n";
    os << "  fixed points normal in target: "
       << (o.at("condition_fixed_normal").get<bool>() ? "yes" : "no")
       << ", kernel witness condition: "
       << (o.at("condition_kernel_witness").get<bool>() ? "yes" : "no") << "\n";
    if (!o.at("table").is_null()) {
      os << "  class product table:\n";
      print_table(os, o.at("table"), "    ");
    }
    if (o.contains("violation")) os << "  violation: " << o.at("violation").get<std::string>() << "\n";
  }
}

void render_inf_res(std::ostream& os, const ordered_json& rep) {
  for (const auto& [name, runs] : rep.at("objects").items()) {
    os << name << ":\n";
    for (const auto& r : runs) {
      os << "  N=" << int_list(r.at("subgroup")) << ": " << r.at("quotient_classes").get<int>()
         << " -> " << r.at("full_classes").get<int>() << " -> "
         << r.at("subgroup_classes").get<int>()
         << (r.at("exact").get<bool>() ? "  exact" : "  NOT exact") << "\n";
      os << "    inflation injective: " << (r.at("inflation_injective").get<bool>() ? "yes" : "no")
         << ", kernel = image: " << (r.at("kernel_equals_image").get<bool>() ? "yes" : "no")
         << ", restriction lands in fixed classes: "
         << (r.at("restriction_into_fixed").get<bool>() ? "yes" : "no") << "\n";
    }
  }
}

void render_seven_term(std::ostream& os, const ordered_json& rep) {
  for (const auto& [name, o] : rep.at("objects").items()) {
    os << name << ":" << (o.at("exact").get<bool>() ? " exact at all 5 interior nodes" : " NOT exact")
       << "\n";
    os << "  fixed points injective: " << (o.at("h0_injective").get<bool>() ? "yes" : "no") << "\n";
    os << "  exact at middle fixed points: " << (o.at("exact_at_h0_middle").get<bool>() ? "yes" : "no")
       << "\n";
    os << "  exact at quotient fixed points: "
       << (o.at("exact_at_h0_quotient").get<bool>() ? "yes" : "no") << "\n";
    os << "  exact at kernel classes: " << (o.at("exact_at_h1_kernel").get<bool>() ? "yes" : "no")
       << "\n";
    os << "  exact at middle classes: " << (o.at("exact_at_h1_middle").get<bool>() ? "yes" : "no")
       << "\n";
    os << "  exact at quotient classes: " << (o.at("exact_at_h1_quotient").get<bool>() ? "yes" : "no")
       << "\n";
    if (o.at("h2_classes").get<int>() >= 0)
      os << "  second cohomology classes: " << o.at("h2_classes").get<int>() << ", obstruction map "
         << int_list(o.at("delta1_map")) << "\n";
    if (o.contains("detail")) os << "  " << o.at("detail").get<std::string>() << "\n";
  }
}

void render_torsors(std::ostream& os, const ordered_json& rep) {
  for (const auto& [name, o] : rep.at("objects").items()) {
    os << name << ": " << o.at("models").get<int>() << " twisted models, "
       << o.at("iso_classes").get<int>() << " isomorphism classes, "
       << o.at("h1_classes").get<int>() << " cohomology classes, one-to-one: "
       << (o.at("bijection").get<bool>() ? "yes" : "no") << "\n";
    for (const auto& [tname, cls] : o.at("fixture_torsor_classes").items())
      os << "  fixture torsor " << tname << " -> class " << cls.get<int>() << "\n";
  }
}

void render_torsor_product(std::ostream& os, const ordered_json& rep) {
  os << rep.at("left").get<std::string>() << " (class " << rep.at("left_class").get<int>() << ") * "
     << rep.at("right").get<std::string>() << " (class " << rep.at("right_class").get<int>()
     << ") -> class " << rep.at("product_class").get<int>() << " over "
     << rep.at("bimodule").get<std::string>() << "\n";
}

void render_suite(std::ostream& os, const ordered_json& rep) {
  for (const auto& c : rep.at("checks")) {
    std::string status = c.at("status").get<std::string>();
    for (auto& ch : status) ch = (char)std::toupper((unsigned char)ch);
    os << status << "  " << c.at("name").get<std::string>() << "  ["
       << c.at("object").get<std::string>() << "]";
    std::string detail = c.at("detail").get<std::string>();
    if (!detail.empty()) os << "  " << detail;
    os << "\n";
  }
  const auto& s = rep.at("summary");
  os << s.at("total").get<int>() << " checks: " << s.at("passed").get<int>() << " passed, "
     << s.at("failed").get<int>() << " failed, " << s.at("skipped").get<int>() << " skipped\n";
}

void render_human(std::ostream& os, const ordered_json& rep) {
  std::string command = rep.at("command").get<std::string>();
  if (command == "validate") render_validate(os, rep);
  else if (command == "h0") render_h0(os, rep);
  else if (command == "h1") render_h1(os, rep);
  else if (command == "h2") render_h2(os, rep);
  else if (command == "inn") render_inn(os, rep);
  else if (command == "zeta") render_zeta(os, rep);
  else if (command == "group-structure") render_group_structure(os, rep);
  else if (command == "inf-res") render_inf_res(os, rep);
  else if (command == "seven-term") render_seven_term(os, rep);
  else if (command == "torsors") render_torsors(os, rep);
  else if (command == "torsor-product") render_torsor_product(os, rep);
  else if (command == "theorem-suite") render_suite(os, rep);
  else os << rep.dump(1) << "\n";
  os << (rep.at("ok").get<bool>() ? "ok\n" : "FAILED\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"first nonabelian cohomology of finite topological groups"};
  app.require_subcommand(0, 0);

  std::string command;
  std::string fixture;
  std::string object;
  std::string format = "human";
  std::string subgroup_csv;
  bool no_continuity = false;
  long long size_cap = 0;

  app.add_option("command", command,
                 "validate | h0 | h1 | h2 | inn | zeta | group-structure | inf-res | "
                 "seven-term | torsors | torsor-product | theorem-suite")
      ->required();
  app.add_option("--fixture", fixture, "fixture file (JSON)")->required();
  app.add_option("--object", object, "object name; torsor-product takes <left>,<right>");
  app.add_flag("--no-continuity", no_continuity,
               "enumerate all derivation pairs, not only continuous ones");
  app.add_option("--size-cap", size_cap, "cap on exhaustive-search candidate counts");
  app.add_option("--format", format, "human | json")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--subgroup", subgroup_csv, "comma-separated element indices (inf-res)");

  CLI11_PARSE(app, argc, argv);

  nlohmann::ordered_json opts = nlohmann::ordered_json::object();
  if (!object.empty()) opts["object"] = object;
  if (no_continuity) opts["continuous_only"] = false;
  if (size_cap > 0) opts["size_cap"] = size_cap;
  if (!subgroup_csv.empty()) {
    std::vector<int> subgroup;
    std::string token;
    std::istringstream in(subgroup_csv);
    while (std::getline(in, token, ',')) {
      try {
        subgroup.push_back(std::stoi(token));
      } catch (const std::exception&) {
        std::cerr << "error (BadArgument): --subgroup expects comma-separated integers\n";
        return 2;
      }
    }
    opts["subgroup"] = subgroup;
  }

  nh1_document* doc = nullptr;
  nh1_status st = nh1_load_file(fixture.c_str(), &doc);
  if (st != NH1_OK) {
    std::cerr << "error (" << nh1_last_error_kind() << "): " << nh1_last_error() << "\n";
    return exit_code_for(st);
  }

  char* report = nullptr;
  st = nh1_run(doc, command.c_str(), opts.dump().c_str(), &report);
  nh1_document_free(doc);
  if (report == nullptr) {
    std::cerr << "error (" << nh1_last_error_kind() << "): " << nh1_last_error() << "\n";
    return exit_code_for(st);
  }

  int code = exit_code_for(st);
  if (format == "json") {
    std::cout << report;
  } else {
    try {
      ordered_json rep = ordered_json::parse(report);
      render_human(std::cout, rep);
    } catch (const std::exception& e) {
      std::cerr << "error (Internal): unreadable report: " << e.what() << "\n";
      code = 1;
    }
  }
  nh1_string_free(report);
  return code;
}
