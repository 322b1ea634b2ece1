// Fixture documents: named groups, maps, actions, bimodules, extensions, and
// torsors in one JSON file.  Loading validates everything eagerly and reports
// every problem at once; emitting writes the canonical machine form, which
// reloads to an identical document.
#pragma once

#include "exact_sequence.hpp"
#include "torsor.hpp"

#include <map>

namespace nabelh1 {

struct MapEntry {
  GroupMap map;
  std::string domain, codomain;
};

struct ActionEntry {
  GroupAction action;
  std::string actor, space;
};

struct BimoduleEntry {
  Bimodule bim;
  std::string G, R, A, mu, act_g_on_a, act_g_on_r, act_r_on_a;
};

struct ExtensionEntry {
  Extension ext;
  std::string a_bim, b_bim, c_bim, iota, pi;
};

struct TorsorEntry {
  Torsor torsor;
  std::string bimodule;
};

struct Document {
  std::map<std::string, GroupPtr> groups;
  std::map<std::string, MapEntry> maps;
  std::map<std::string, ActionEntry> actions;
  std::map<std::string, BimoduleEntry> bimodules;
  std::map<std::string, ExtensionEntry> extensions;
  std::map<std::string, TorsorEntry> torsors;
};

// Throws ParseError for malformed JSON or schema violations,
// ReferenceError when only references are broken, ValidationError otherwise;
// semantic messages carry one line per failing object.
Document load_document_string(const std::string& text);
Document load_document_file(const std::string& path);

std::string emit_document(const Document& doc);

const GroupPtr& find_group(const Document& doc, const std::string& name);
const MapEntry& find_map(const Document& doc, const std::string& name);
const ActionEntry& find_action(const Document& doc, const std::string& name);
const BimoduleEntry& find_bimodule(const Document& doc, const std::string& name);
const ExtensionEntry& find_extension(const Document& doc, const std::string& name);
const TorsorEntry& find_torsor(const Document& doc, const std::string& name);

}  // namespace nabelh1
