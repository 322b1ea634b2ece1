#include "fixture.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace nabelh1 {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
  throw ParseError("SchemaViolation", path + ": " + msg);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path, std::string("missing field '") + key + "'");
  return *it;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& path) {
  if (!obj.is_object()) schema_fail(path, "expected an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed)
      if (item.key() == k) known = true;
    if (!known) schema_fail(path, "unknown field '" + item.key() + "'");
  }
}

int int_field(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_number_integer()) schema_fail(path, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string str_field(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_string()) schema_fail(path, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<Elem> elem_vec(const json& v, const std::string& path) {
  if (!v.is_array()) schema_fail(path, "expected an array of integers");
  std::vector<Elem> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number_integer()) schema_fail(path, "expected an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Table elem_table(const json& v, const std::string& path) {
  if (!v.is_array()) schema_fail(path, "expected an array of rows");
  Table out;
  out.reserve(v.size());
  for (const auto& row : v) out.push_back(elem_vec(row, path));
  return out;
}

void require_range(const std::vector<Elem>& v, int bound, const std::string& path) {
  for (Elem x : v)
    if (x < 0 || x >= bound)
      throw ValidationError("MalformedTable", path + ": entry " + std::to_string(x) + " out of range");
}

// raw file indices -> validated indices, via the reindexings of both groups
std::vector<Elem> remap_images(const std::vector<Elem>& raw, const Group& dom, const Group& cod,
                               const std::string& path) {
  if ((int)raw.size() != dom.order())
    throw ValidationError("MalformedTable", path + ": expected " + std::to_string(dom.order()) + " images");
  require_range(raw, cod.order(), path);
  const auto& pd = dom.reindexing();
  const auto& pc = cod.reindexing();
  std::vector<Elem> out(raw.size());
  for (int i = 0; i < (int)raw.size(); ++i) out[pd[i]] = pc[raw[i]];
  return out;
}

Table remap_action_table(const Table& raw, const Group& actor, const Group& space,
                         const std::string& path) {
  if ((int)raw.size() != actor.order())
    throw ValidationError("MalformedTable", path + ": expected " + std::to_string(actor.order()) + " rows");
  const auto& pa = actor.reindexing();
  const auto& ps = space.reindexing();
  Table out((size_t)actor.order(), std::vector<Elem>((size_t)space.order()));
  for (int g = 0; g < actor.order(); ++g) {
    if ((int)raw[g].size() != space.order())
      throw ValidationError("MalformedTable", path + ": ragged action table");
    require_range(raw[g], space.order(), path);
    for (int a = 0; a < space.order(); ++a) out[pa[g]][ps[a]] = ps[raw[g][a]];
  }
  return out;
}

struct ErrorSink {
  std::vector<std::string> lines;
  bool any_nonreference = false;

  template <typename Fn>
  void attempt(const std::string& where, Fn&& fn) {
    try {
      fn();
    } catch (const ParseError&) {
      throw;  // schema problems abort the whole load
    } catch (const Error& e) {
      if (dynamic_cast<const ReferenceError*>(&e) == nullptr) any_nonreference = true;
      lines.push_back(where + ": " + e.kind + ": " + e.what());
    }
  }

  void finish() const {
    if (lines.empty()) return;
    std::string joined;
    for (const auto& l : lines) {
      if (!joined.empty()) joined += "\n";
      joined += l;
    }
    if (any_nonreference) throw ValidationError("FixtureInvalid", joined);
    throw ReferenceError("UnresolvedReference", joined);
  }
};

template <typename M>
const typename M::mapped_type& find_in(const M& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end())
    throw ReferenceError(std::string("Unknown") + what, std::string("no ") + what + " named '" + name + "'");
  return it->second;
}

void insert_synthesized_group(Document& doc, const std::string& name, GroupPtr g) {
  if (doc.groups.count(name))
    throw ValidationError("NameCollision", "synthesized group '" + name + "' collides with an existing name");
  doc.groups.emplace(name, std::move(g));
}

void load_groups(Document& doc, const json& root, ErrorSink& sink) {
  if (!root.contains("groups")) return;
  const json& cat = root.at("groups");
  if (!cat.is_object()) schema_fail("groups", "expected an object");
  for (const auto& item : cat.items()) {
    const std::string path = "groups/" + item.key();
    const json& jg = item.value();
    check_keys(jg, {"order", "cayley", "open_subgroup", "identity"}, path);
    int order = int_field(jg, "order", path);
    Table cayley = elem_table(field(jg, "cayley", path), path);
    ElemSet open;
    if (jg.contains("open_subgroup")) open = elem_vec(jg.at("open_subgroup"), path);
    std::optional<Elem> identity;
    if (jg.contains("identity")) identity = int_field(jg, "identity", path);
    sink.attempt(path, [&] {
      if ((int)cayley.size() != order)
        throw ValidationError("MalformedTable", path + ": order disagrees with the table");
      doc.groups.emplace(item.key(), Group::validate(cayley, identity, open));
    });
  }
}

void load_maps(Document& doc, const json& root, ErrorSink& sink) {
  if (!root.contains("maps")) return;
  const json& cat = root.at("maps");
  if (!cat.is_object()) schema_fail("maps", "expected an object");
  for (const auto& item : cat.items()) {
    const std::string path = "maps/" + item.key();
    const json& jm = item.value();
    check_keys(jm, {"domain", "codomain", "images", "is_homomorphism"}, path);
    std::string dname = str_field(jm, "domain", path);
    std::string cname = str_field(jm, "codomain", path);
    std::vector<Elem> raw = elem_vec(field(jm, "images", path), path);
    bool is_hom = true;
    if (jm.contains("is_homomorphism")) {
      if (!jm.at("is_homomorphism").is_boolean())
        schema_fail(path, "field 'is_homomorphism' must be a boolean");
      is_hom = jm.at("is_homomorphism").get<bool>();
    }
    sink.attempt(path, [&] {
      GroupPtr dom = find_in(doc.groups, dname, "group");
      GroupPtr cod = find_in(doc.groups, cname, "group");
      GroupMap m = validate_map(dom, cod, remap_images(raw, *dom, *cod, path), is_hom);
      doc.maps.emplace(item.key(), MapEntry{std::move(m), dname, cname});
    });
  }
}

void load_actions(Document& doc, const json& root, ErrorSink& sink) {
  if (!root.contains("actions")) return;
  const json& cat = root.at("actions");
  if (!cat.is_object()) schema_fail("actions", "expected an object");
  for (const auto& item : cat.items()) {
    const std::string path = "actions/" + item.key();
    const json& ja = item.value();
    check_keys(ja, {"actor", "space", "table"}, path);
    std::string gname = str_field(ja, "actor", path);
    std::string sname = str_field(ja, "space", path);
    Table raw = elem_table(field(ja, "table", path), path);
    sink.attempt(path, [&] {
      GroupPtr actor = find_in(doc.groups, gname, "group");
      GroupPtr space = find_in(doc.groups, sname, "group");
      GroupAction act = validate_action(actor, space, remap_action_table(raw, *actor, *space, path));
      doc.actions.emplace(item.key(), ActionEntry{std::move(act), gname, sname});
    });
  }
}

void load_bimodules(Document& doc, const json& root, ErrorSink& sink) {
  if (!root.contains("bimodules")) return;
  const json& cat = root.at("bimodules");
  if (!cat.is_object()) schema_fail("bimodules", "expected an object");
  for (const auto& item : cat.items()) {
    const std::string path = "bimodules/" + item.key();
    const json& jb = item.value();
    if (jb.is_object() && jb.contains("conjugation")) {
      check_keys(jb, {"conjugation"}, path);
      const json& jc = jb.at("conjugation");
      check_keys(jc, {"G", "A", "act_G_on_A"}, path);
      std::string gname = str_field(jc, "G", path);
      std::string aname = str_field(jc, "A", path);
      std::string actname = str_field(jc, "act_G_on_A", path);
      sink.attempt(path, [&] {
        GroupPtr G = find_in(doc.groups, gname, "group");
        GroupPtr A = find_in(doc.groups, aname, "group");
        const ActionEntry& act = find_in(doc.actions, actname, "action");
        if (act.action.actor != G || act.action.space != A)
          throw ValidationError("GroupMismatch", "action '" + actname + "' is not G acting on A");
        Bimodule bim = make_conjugation_bimodule(G, A, act.action);
        std::string rname = item.key() + "/R";
        std::string muname = item.key() + "/mu";
        std::string grname = item.key() + "/act_G_on_R";
        std::string raname = item.key() + "/act_R_on_A";
        insert_synthesized_group(doc, rname, bim.R);
        doc.maps.emplace(muname, MapEntry{bim.mu, aname, rname});
        doc.actions.emplace(grname, ActionEntry{bim.g_on_r, gname, rname});
        doc.actions.emplace(raname, ActionEntry{bim.r_on_a, rname, aname});
        doc.bimodules.emplace(item.key(), BimoduleEntry{std::move(bim), gname, rname, aname,
                                                        muname, actname, grname, raname});
      });
      continue;
    }
    check_keys(jb, {"G", "R", "A", "mu", "act_G_on_A", "act_G_on_R", "act_R_on_A"}, path);
    std::string gname = str_field(jb, "G", path);
    std::string rname = str_field(jb, "R", path);
    std::string aname = str_field(jb, "A", path);
    std::string muname = str_field(jb, "mu", path);
    std::string ganame = str_field(jb, "act_G_on_A", path);
    std::string grname = str_field(jb, "act_G_on_R", path);
    std::string raname = str_field(jb, "act_R_on_A", path);
    sink.attempt(path, [&] {
      GroupPtr G = find_in(doc.groups, gname, "group");
      GroupPtr R = find_in(doc.groups, rname, "group");
      GroupPtr A = find_in(doc.groups, aname, "group");
      const MapEntry& mu = find_in(doc.maps, muname, "map");
      const ActionEntry& ga = find_in(doc.actions, ganame, "action");
      const ActionEntry& gr = find_in(doc.actions, grname, "action");
      const ActionEntry& ra = find_in(doc.actions, raname, "action");
      Bimodule bim = assemble_bimodule(G, R, A, mu.map, ga.action, gr.action, ra.action);
      doc.bimodules.emplace(item.key(), BimoduleEntry{std::move(bim), gname, rname, aname,
                                                      muname, ganame, grname, raname});
    });
  }
}

void load_extensions(Document& doc, const json& root, ErrorSink& sink) {
  if (!root.contains("extensions")) return;
  const json& cat = root.at("extensions");
  if (!cat.is_object()) schema_fail("extensions", "expected an object");
  for (const auto& item : cat.items()) {
    const std::string path = "extensions/" + item.key();
    const json& je = item.value();
    check_keys(je, {"A_bim", "B_bim", "C_bim", "iota", "pi", "section"}, path);
    std::string an = str_field(je, "A_bim", path);
    std::string bn = str_field(je, "B_bim", path);
    std::string cn = str_field(je, "C_bim", path);
    std::string in = str_field(je, "iota", path);
    std::string pn = str_field(je, "pi", path);
    std::optional<std::vector<Elem>> raw_section;
    if (je.contains("section")) raw_section = elem_vec(je.at("section"), path);
    sink.attempt(path, [&] {
      const BimoduleEntry& a = find_in(doc.bimodules, an, "bimodule");
      const BimoduleEntry& b = find_in(doc.bimodules, bn, "bimodule");
      const BimoduleEntry& c = find_in(doc.bimodules, cn, "bimodule");
      const MapEntry& iota = find_in(doc.maps, in, "map");
      const MapEntry& pi = find_in(doc.maps, pn, "map");
      std::optional<std::vector<Elem>> section;
      if (raw_section) section = remap_images(*raw_section, *c.bim.A, *b.bim.A, path);
      Extension ext =
          validate_extension(a.bim, b.bim, c.bim, iota.map, pi.map, std::move(section));
      doc.extensions.emplace(item.key(), ExtensionEntry{std::move(ext), an, bn, cn, in, pn});
    });
  }
}

void load_torsors(Document& doc, const json& root, ErrorSink& sink) {
  if (!root.contains("torsors")) return;
  const json& cat = root.at("torsors");
  if (!cat.is_object()) schema_fail("torsors", "expected an object");
  for (const auto& item : cat.items()) {
    const std::string path = "torsors/" + item.key();
    const json& jt = item.value();
    check_keys(jt, {"bimodule", "g_action", "a_action", "f"}, path);
    std::string bname = str_field(jt, "bimodule", path);
    Table raw_g = elem_table(field(jt, "g_action", path), path);
    Table raw_a = elem_table(field(jt, "a_action", path), path);
    std::vector<Elem> raw_f = elem_vec(field(jt, "f", path), path);
    sink.attempt(path, [&] {
      const BimoduleEntry& be = find_in(doc.bimodules, bname, "bimodule");
      const Group& G = *be.bim.G;
      const Group& A = *be.bim.A;
      const Group& R = *be.bim.R;
      int points = (int)raw_f.size();
      Torsor T;
      // point indices are not re-indexed; only group coordinates are
      if ((int)raw_g.size() != G.order())
        throw ValidationError("MalformedTable", path + ": g_action needs one row per group element");
      T.g_action.assign((size_t)G.order(), std::vector<Elem>((size_t)points));
      for (int g = 0; g < G.order(); ++g) {
        if ((int)raw_g[g].size() != points)
          throw ValidationError("MalformedTable", path + ": ragged g_action");
        require_range(raw_g[g], points, path);
        for (int p = 0; p < points; ++p) T.g_action[G.reindexing()[g]][p] = raw_g[g][p];
      }
      if ((int)raw_a.size() != points)
        throw ValidationError("MalformedTable", path + ": a_action needs one row per point");
      T.a_action.assign((size_t)points, std::vector<Elem>((size_t)A.order()));
      for (int p = 0; p < points; ++p) {
        if ((int)raw_a[p].size() != A.order())
          throw ValidationError("MalformedTable", path + ": ragged a_action");
        require_range(raw_a[p], points, path);
        for (int a = 0; a < A.order(); ++a) T.a_action[p][A.reindexing()[a]] = raw_a[p][a];
      }
      require_range(raw_f, R.order(), path);
      T.f.resize((size_t)points);
      for (int p = 0; p < points; ++p) T.f[p] = R.reindexing()[raw_f[p]];
      validate_torsor(be.bim, T);
      doc.torsors.emplace(item.key(), TorsorEntry{std::move(T), bname});
    });
  }
}

}  // namespace

Document load_document_string(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError("MalformedJson", e.what());
  }
  check_keys(root, {"groups", "maps", "actions", "bimodules", "extensions", "torsors"},
             "document");
  Document doc;
  ErrorSink sink;
  load_groups(doc, root, sink);
  load_maps(doc, root, sink);
  load_actions(doc, root, sink);
  load_bimodules(doc, root, sink);
  load_extensions(doc, root, sink);
  load_torsors(doc, root, sink);
  sink.finish();
  return doc;
}

Document load_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("CannotReadFile", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_document_string(buf.str());
}

std::string emit_document(const Document& doc) {
  ordered_json out = ordered_json::object();
  if (!doc.groups.empty()) {
    ordered_json cat = ordered_json::object();
    for (const auto& [name, g] : doc.groups) {
      ordered_json o;
      o["order"] = g->order();
      o["cayley"] = g->cayley();
      o["open_subgroup"] = g->open_subgroup();
      cat[name] = std::move(o);
    }
    out["groups"] = std::move(cat);
  }
  if (!doc.maps.empty()) {
    ordered_json cat = ordered_json::object();
    for (const auto& [name, m] : doc.maps) {
      ordered_json o;
      o["domain"] = m.domain;
      o["codomain"] = m.codomain;
      o["images"] = m.map.images;
      o["is_homomorphism"] = m.map.is_homomorphism;
      cat[name] = std::move(o);
    }
    out["maps"] = std::move(cat);
  }
  if (!doc.actions.empty()) {
    ordered_json cat = ordered_json::object();
    for (const auto& [name, a] : doc.actions) {
      ordered_json o;
      o["actor"] = a.actor;
      o["space"] = a.space;
      o["table"] = a.action.table;
      cat[name] = std::move(o);
    }
    out["actions"] = std::move(cat);
  }
  if (!doc.bimodules.empty()) {
    ordered_json cat = ordered_json::object();
    for (const auto& [name, b] : doc.bimodules) {
      ordered_json o;
      o["G"] = b.G;
      o["R"] = b.R;
      o["A"] = b.A;
      o["mu"] = b.mu;
      o["act_G_on_A"] = b.act_g_on_a;
      o["act_G_on_R"] = b.act_g_on_r;
      o["act_R_on_A"] = b.act_r_on_a;
      cat[name] = std::move(o);
    }
    out["bimodules"] = std::move(cat);
  }
  if (!doc.extensions.empty()) {
    ordered_json cat = ordered_json::object();
    for (const auto& [name, e] : doc.extensions) {
      ordered_json o;
      o["A_bim"] = e.a_bim;
      o["B_bim"] = e.b_bim;
      o["C_bim"] = e.c_bim;
      o["iota"] = e.iota;
      o["pi"] = e.pi;
      o["section"] = e.ext.section;
      cat[name] = std::move(o);
    }
    out["extensions"] = std::move(cat);
  }
  if (!doc.torsors.empty()) {
    ordered_json cat = ordered_json::object();
    for (const auto& [name, t] : doc.torsors) {
      ordered_json o;
      o["bimodule"] = t.bimodule;
      o["g_action"] = t.torsor.g_action;
      o["a_action"] = t.torsor.a_action;
      o["f"] = t.torsor.f;
      cat[name] = std::move(o);
    }
    out["torsors"] = std::move(cat);
  }
  return out.dump(1) + "\n";
}

const GroupPtr& find_group(const Document& doc, const std::string& name) {
  return find_in(doc.groups, name, "group");
}
const MapEntry& find_map(const Document& doc, const std::string& name) {
  return find_in(doc.maps, name, "map");
}
const ActionEntry& find_action(const Document& doc, const std::string& name) {
  return find_in(doc.actions, name, "action");
}
const BimoduleEntry& find_bimodule(const Document& doc, const std::string& name) {
  return find_in(doc.bimodules, name, "bimodule");
}
const ExtensionEntry& find_extension(const Document& doc, const std::string& name) {
  return find_in(doc.extensions, name, "extension");
}
const TorsorEntry& find_torsor(const Document& doc, const std::string& name) {
  return find_in(doc.torsors, name, "torsor");
}

}  // namespace nabelh1
