#pragma once

// Abelian analysis lattice: a tree alternating integer levels (the group, then JSJ vertex
// groups) with ".1" free-factorization levels. Decompositions are supplied by the user;
// only their shape is validated here.

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "limitgrp/error.hpp"
#include "limitgrp/presentation.hpp"
#include "limitgrp/text_format.hpp"

namespace limitgrp {

class LatticeError : public Error {
 public:
  using Error::Error;
};

enum class NodeKind { group, free_factor_level, rigid, abelian, quadratically_hanging, free };

inline const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::group: return "group";
    case NodeKind::free_factor_level: return "free-factor-level";
    case NodeKind::rigid: return "rigid";
    case NodeKind::abelian: return "abelian";
    case NodeKind::quadratically_hanging: return "quadratically-hanging";
    case NodeKind::free: return "free";
  }
  return "?";
}

inline NodeKind node_kind_from_string(const std::string& s) {
  for (NodeKind k : {NodeKind::group, NodeKind::free_factor_level, NodeKind::rigid, NodeKind::abelian,
                     NodeKind::quadratically_hanging, NodeKind::free}) {
    if (s == to_string(k)) return k;
  }
  throw LatticeError("unknown node kind '" + s + "'");
}

/// Free, abelian and QH vertex groups (free with boundary) have no children.
inline bool is_leaf_kind(NodeKind k) {
  return k == NodeKind::free || k == NodeKind::abelian || k == NodeKind::quadratically_hanging;
}

struct LatticeNode {
  std::string label;
  NodeKind kind = NodeKind::group;
  std::optional<Presentation> presentation;
  std::vector<LatticeNode> children;

  friend bool operator==(const LatticeNode& a, const LatticeNode& b) {
    return a.label == b.label && a.kind == b.kind && a.presentation == b.presentation &&
           a.children == b.children;
  }
};

struct AnalysisLattice {
  LatticeNode root;
  std::size_t declared_rank = 0;

  friend bool operator==(const AnalysisLattice&, const AnalysisLattice&) = default;
};

namespace detail {

// integer levels hold the group or JSJ vertex groups; fractional levels hold Grushko factors
inline void validate_node(const LatticeNode& n, bool integer_level, bool is_root) {
  if (is_leaf_kind(n.kind) && !n.children.empty()) {
    throw LatticeError("node '" + n.label + "' of kind " + to_string(n.kind) + " cannot have children");
  }
  if (n.kind == NodeKind::group && !is_root) {
    throw LatticeError("node '" + n.label + "': kind group is only allowed at the root");
  }
  if (integer_level) {
    if (n.kind == NodeKind::free_factor_level) {
      throw LatticeError("node '" + n.label + "': free-factor-level node at an integer level");
    }
  } else {
    if (n.kind != NodeKind::free_factor_level && n.kind != NodeKind::free && n.kind != NodeKind::abelian) {
      throw LatticeError("node '" + n.label + "': a free factorization level may only hold " +
                         "free-factor-level, free or abelian nodes, not " + to_string(n.kind));
    }
  }
  for (const auto& c : n.children) validate_node(c, !integer_level, false);
}

inline std::size_t node_height(const LatticeNode& n, bool integer_level) {
  std::size_t h = 0;
  for (const auto& c : n.children) {
    h = std::max(h, node_height(c, !integer_level) + (integer_level ? 0 : 1));
  }
  return h;
}

}  // namespace detail

inline void validate(const AnalysisLattice& l) { detail::validate_node(l.root, true, true); }

/// Number of integer levels below the root on the longest chain. The ".1" levels only
/// record free factorizations and add nothing on their own.
inline std::size_t height(const AnalysisLattice& l) { return detail::node_height(l.root, true); }

struct BoundReport {
  std::size_t height = 0;
  std::size_t rank_bound = 0;  // 3 * declared rank
  bool within_rank_bound = true;
  std::optional<std::size_t> resolution_length;
  bool within_resolution_bound = true;
  bool passed = true;
};

/// height <= 3 * rank, and height <= k when a strict resolution length k is supplied. A
/// violation means the supplied decomposition is inconsistent; it is reported, not thrown.
inline BoundReport check_bound(const AnalysisLattice& l, std::optional<std::size_t> resolution_length = {}) {
  BoundReport r;
  r.height = height(l);
  r.rank_bound = 3 * l.declared_rank;
  r.within_rank_bound = r.height <= r.rank_bound;
  r.resolution_length = resolution_length;
  if (resolution_length) r.within_resolution_bound = r.height <= *resolution_length;
  r.passed = r.within_rank_bound && r.within_resolution_bound;
  return r;
}

inline nlohmann::json bound_report_to_json(const BoundReport& r) {
  nlohmann::json j{{"schema_version", 1},
                   {"note", "decompositions are trusted input; only their shape was validated"},
                   {"height", r.height},
                   {"rank_bound", r.rank_bound},
                   {"within_rank_bound", r.within_rank_bound},
                   {"passed", r.passed}};
  if (r.resolution_length) {
    j["resolution_length"] = *r.resolution_length;
    j["within_resolution_bound"] = r.within_resolution_bound;
  }
  return j;
}

namespace detail {

inline LatticeNode* find_graft_site(LatticeNode& n, const std::string& label, bool integer_level,
                                    std::size_t level, std::size_t& found_level) {
  if (integer_level && n.label == label) {
    found_level = level;
    return &n;
  }
  for (auto& c : n.children) {
    if (auto* hit = find_graft_site(c, label, !integer_level, level + (integer_level ? 0 : 1), found_level)) {
      return hit;
    }
  }
  return nullptr;
}

}  // namespace detail

/// Level (number of integer descents from the root) of the integer-level node `label`.
inline std::size_t level_of(const AnalysisLattice& l, const std::string& label) {
  std::size_t lvl = 0;
  auto copy = l.root;
  if (!detail::find_graft_site(copy, label, true, 0, lvl)) throw LatticeError("no integer-level node '" + label + "'");
  return lvl;
}

/// Attaches the lattice of a vertex group at the childless integer-level node `label`:
/// that node takes over the children of `sub`'s root.
inline AnalysisLattice graft(const AnalysisLattice& l, const std::string& label, const AnalysisLattice& sub) {
  AnalysisLattice out = l;
  std::size_t lvl = 0;
  LatticeNode* site = detail::find_graft_site(out.root, label, true, 0, lvl);
  if (!site) throw LatticeError("graft: no integer-level node '" + label + "'");
  if (!site->children.empty()) throw LatticeError("graft: node '" + label + "' already has children");
  if (is_leaf_kind(site->kind) && !sub.root.children.empty()) {
    throw LatticeError("graft: node '" + label + "' is a leaf kind");
  }
  site->children = sub.root.children;
  validate(out);
  return out;
}

// JSON form: {"rank": n, "root": {label, kind, presentation?, children: [...]}} or a bare node.

inline nlohmann::json node_to_json(const LatticeNode& n) {
  nlohmann::json j{{"label", n.label}, {"kind", to_string(n.kind)}};
  if (n.presentation) j["presentation"] = format_presentation(*n.presentation);
  nlohmann::json kids = nlohmann::json::array();
  for (const auto& c : n.children) kids.push_back(node_to_json(c));
  j["children"] = std::move(kids);
  return j;
}

inline LatticeNode node_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw LatticeError("lattice node must be a JSON object");
  LatticeNode n;
  n.label = j.at("label").get<std::string>();
  n.kind = node_kind_from_string(j.at("kind").get<std::string>());
  if (j.contains("presentation")) n.presentation = parse_presentation(j["presentation"].get<std::string>());
  if (j.contains("children")) {
    for (const auto& c : j["children"]) n.children.push_back(node_from_json(c));
  }
  return n;
}

inline nlohmann::json lattice_to_json(const AnalysisLattice& l) {
  return {{"rank", l.declared_rank}, {"root", node_to_json(l.root)}};
}

inline AnalysisLattice lattice_from_json(const nlohmann::json& j) {
  AnalysisLattice l;
  if (j.contains("root")) {
    l.root = node_from_json(j["root"]);
    if (j.contains("rank")) l.declared_rank = j["rank"].get<std::size_t>();
  } else {
    l.root = node_from_json(j);
  }
  validate(l);
  return l;
}

// Indented text form: optional `rank: n` header, then one `kind:label` per line with two
// spaces of indentation per depth.

inline std::string lattice_to_text(const AnalysisLattice& l) {
  std::string out = "rank: " + std::to_string(l.declared_rank) + "\n";
  auto emit = [&](auto&& self, const LatticeNode& n, std::size_t depth) -> void {
    out += std::string(2 * depth, ' ') + to_string(n.kind) + ":" + n.label + "\n";
    for (const auto& c : n.children) self(self, c, depth + 1);
  };
  emit(emit, l.root, 0);
  return out;
}

inline AnalysisLattice lattice_from_text(const std::string& text) {
  AnalysisLattice l;
  std::vector<LatticeNode*> stack;
  bool have_root = false;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (line.empty()) continue;
    std::size_t indent = 0;
    while (indent < line.size() && line[indent] == ' ') ++indent;
    const std::string body = line.substr(indent);
    if (body.rfind("rank:", 0) == 0) {
      if (have_root) throw ParseError("rank: header must precede the tree", line_no, indent + 1);
      l.declared_rank = std::stoul(detail::trim(body.substr(5)));
      continue;
    }
    if (indent % 2 != 0) throw ParseError("indentation must be a multiple of two spaces", line_no, 1);
    const std::size_t depth = indent / 2;
    const auto colon = body.find(':');
    if (colon == std::string::npos) throw ParseError("expected kind:label", line_no, indent + 1);
    LatticeNode node;
    try {
      node.kind = node_kind_from_string(body.substr(0, colon));
    } catch (const LatticeError& e) {
      throw ParseError(e.what(), line_no, indent + 1);
    }
    node.label = detail::trim(body.substr(colon + 1));
    if (depth == 0) {
      if (have_root) throw ParseError("second root node", line_no, 1);
      l.root = std::move(node);
      have_root = true;
      stack = {&l.root};
      continue;
    }
    if (!have_root || depth > stack.size()) throw ParseError("node is indented too deeply", line_no, indent + 1);
    stack.resize(depth);
    stack.back()->children.push_back(std::move(node));
    stack.push_back(&stack.back()->children.back());
  }
  if (!have_root) throw ParseError("empty lattice document", line_no, 1);
  validate(l);
  return l;
}

/// Accepts either the JSON or the indented text form.
inline AnalysisLattice parse_lattice(const std::string& document) {
  const auto first = document.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && document[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(document);
    } catch (const nlohmann::json::exception& e) {
      throw LatticeError(std::string("lattice JSON: ") + e.what());
    }
    try {
      return lattice_from_json(j);
    } catch (const nlohmann::json::exception& e) {
      throw LatticeError(std::string("lattice JSON: ") + e.what());
    }
  }
  return lattice_from_text(document);
}

}  // namespace limitgrp
