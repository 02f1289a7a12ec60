#!/usr/bin/env python3
"""Regenerates include/limitgrp/catalog.hpp from the fixture files under data/."""
import pathlib
import sys

root = pathlib.Path(__file__).resolve().parent.parent
data = root / "data"
out = root / "include" / "limitgrp" / "catalog.hpp"

entries = []
for path in sorted(p for p in data.rglob("*") if p.is_file()):
    rel = path.relative_to(data).as_posix()
    text = path.read_text()
    if ')catalog"' in text:
        sys.exit(f"{rel}: contains the raw-string delimiter")
    entries.append(f'      {{"{rel}", R"catalog({text})catalog"}},')

body = "\n".join(entries)
out.write_text(f"""#pragma once

// Generated by tools/embed_catalog.py from data/. Do not edit by hand; the catalog test
// fails when this header and the files drift apart.

#include <map>
#include <string>
#include <string_view>

#include "limitgrp/error.hpp"

namespace limitgrp {{

/// Shipped fixtures keyed by their path relative to data/.
inline const std::map<std::string_view, std::string_view>& catalog_files() {{
  static const std::map<std::string_view, std::string_view> files{{
{body}
  }};
  return files;
}}

inline std::string catalog_file(std::string_view name) {{
  const auto& files = catalog_files();
  auto it = files.find(name);
  if (it == files.end()) throw Error("no catalog entry '" + std::string(name) + "'");
  return std::string(it->second);
}}

}}  // namespace limitgrp
""")
