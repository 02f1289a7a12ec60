#pragma once

// Generated by tools/embed_catalog.py from data/. Do not edit by hand; the catalog test
// fails when this header and the files drift apart.

#include <map>
#include <string>
#include <string_view>

#include "limitgrp/error.hpp"

namespace limitgrp {

/// Shipped fixtures keyed by their path relative to data/.
inline const std::map<std::string_view, std::string_view>& catalog_files() {
  static const std::map<std::string_view, std::string_view> files{
      {"groups/abelian.grp", R"catalog(# Free abelian groups
group Z
gens: a

group Z2
gens: a b
rels: [a,b]

group Z3
gens: a b c
rels: [a,b] ; [a,c] ; [b,c]
)catalog"},
      {"groups/free.grp", R"catalog(# Free groups F1..F5
group F1
gens: a

group F2
gens: a b

group F3
gens: a b c

group F4
gens: a b c d

group F5
gens: a b c d e
)catalog"},
      {"lattices/abelian.json", R"catalog({"rank": 3, "root": {"label": "Z3", "kind": "abelian", "children": []}}
)catalog"},
      {"lattices/adversarial.json", R"catalog({
  "rank": 2,
  "root": {
    "label": "G",
    "kind": "group",
    "children": [
      {
        "label": "G.A",
        "kind": "free-factor-level",
        "children": [
          {
            "label": "R1",
            "kind": "rigid",
            "children": [
              {
                "label": "R1.A",
                "kind": "free-factor-level",
                "children": [
                  {
                    "label": "R2",
                    "kind": "rigid",
                    "children": [
                      {
                        "label": "R2.A",
                        "kind": "free-factor-level",
                        "children": [
                          {
                            "label": "R3",
                            "kind": "rigid",
                            "children": [
                              {
                                "label": "R3.A",
                                "kind": "free-factor-level",
                                "children": [
                                  {
                                    "label": "R4",
                                    "kind": "rigid",
                                    "children": [
                                      {
                                        "label": "R4.A",
                                        "kind": "free-factor-level",
                                        "children": [
                                          {
                                            "label": "R5",
                                            "kind": "rigid",
                                            "children": [
                                              {
                                                "label": "R5.A",
                                                "kind": "free-factor-level",
                                                "children": [
                                                  {
                                                    "label": "R6",
                                                    "kind": "rigid",
                                                    "children": [
                                                      {
                                                        "label": "R6.A",
                                                        "kind": "free-factor-level",
                                                        "children": [
                                                          {
                                                            "label": "R7",
                                                            "kind": "rigid",
                                                            "children": []
                                                          }
                                                        ]
                                                      }
                                                    ]
                                                  }
                                                ]
                                              }
                                            ]
                                          }
                                        ]
                                      }
                                    ]
                                  }
                                ]
                              }
                            ]
                          }
                        ]
                      }
                    ]
                  }
                ]
              }
            ]
          }
        ]
      }
    ]
  }
}
)catalog"},
      {"lattices/depth3.json", R"catalog({
  "rank": 4,
  "root": {
    "label": "L", "kind": "group",
    "children": [
      {"label": "L.A", "kind": "free-factor-level", "children": [
        {"label": "R1", "kind": "rigid", "children": [
          {"label": "R1.A", "kind": "free-factor-level", "children": [
            {"label": "R2", "kind": "rigid", "children": [
              {"label": "R2.A", "kind": "free-factor-level", "children": [
                {"label": "R3", "kind": "rigid", "children": []},
                {"label": "Q3", "kind": "quadratically-hanging", "children": []}
              ]},
              {"label": "R2.F", "kind": "free", "children": []}
            ]},
            {"label": "Z2", "kind": "abelian", "children": []}
          ]}
        ]},
        {"label": "Q1", "kind": "quadratically-hanging", "children": []}
      ]},
      {"label": "L.F", "kind": "free", "children": []}
    ]
  }
}
)catalog"},
      {"lattices/depth3.txt", R"catalog(rank: 4
group:L
  free-factor-level:L.A
    rigid:R1
      free-factor-level:R1.A
        rigid:R2
          free-factor-level:R2.A
            rigid:R3
            quadratically-hanging:Q3
          free:R2.F
        abelian:Z2
    quadratically-hanging:Q1
  free:L.F
)catalog"},
      {"lattices/free.json", R"catalog({"rank": 2, "root": {"label": "F2", "kind": "free", "children": []}}
)catalog"},
      {"lattices/two-level.json", R"catalog({
  "rank": 3,
  "root": {
    "label": "G", "kind": "group",
    "children": [
      {"label": "A", "kind": "free-factor-level", "children": [
        {"label": "R", "kind": "rigid", "children": []},
        {"label": "Z2", "kind": "abelian", "children": []}
      ]},
      {"label": "F1", "kind": "free", "children": []}
    ]
  }
}
)catalog"},
      {"resolutions/bad-relator.json", R"catalog({
  "name": "Z2 -> F2 (not a homomorphism)",
  "stages": [
    {"name": "Z2", "gens": ["a", "b"], "rels": ["[a,b]"]},
    {"name": "F2", "gens": ["a", "b"]}
  ],
  "maps": [
    {"images": ["a", "b"]}
  ],
  "witnesses": ["b"],
  "terminal_rank": 2
}
)catalog"},
      {"resolutions/bad-witness.json", R"catalog({
  "name": "F2 -> Z2 -> Z with a witness that survives",
  "stages": [
    {"name": "F2", "gens": ["a", "b"]},
    {"name": "Z2", "gens": ["a", "b"], "rels": ["[a,b]"]},
    {"name": "Z", "gens": ["a"]}
  ],
  "maps": [
    {"images": ["a", "b"]},
    {"images": ["a", "1"]}
  ],
  "witnesses": ["a", "b"],
  "terminal_rank": 1
}
)catalog"},
      {"resolutions/corrupted-map.json", R"catalog({
  "name": "F2 -> Z2 -> Z with b sent to a",
  "stages": [
    {"name": "F2", "gens": ["a", "b"]},
    {"name": "Z2", "gens": ["a", "b"], "rels": ["[a,b]"]},
    {"name": "Z", "gens": ["a"]}
  ],
  "maps": [
    {"images": ["a", "b"]},
    {"images": ["a", "a"]}
  ],
  "witnesses": ["[a,b]", "b"],
  "terminal_rank": 1
}
)catalog"},
      {"resolutions/f2-z2-z.json", R"catalog({
  "name": "F2 -> Z2 -> Z",
  "stages": [
    {"name": "F2", "gens": ["a", "b"]},
    {"name": "Z2", "gens": ["a", "b"], "rels": ["[a,b]"]},
    {"name": "Z", "gens": ["a"]}
  ],
  "maps": [
    {"images": ["a", "b"]},
    {"images": ["a", "1"]}
  ],
  "witnesses": ["[a,b]", "b"],
  "terminal_rank": 1
}
)catalog"},
      {"resolutions/f3-z3-z2-z.json", R"catalog({
  "name": "F3 -> Z3 -> Z2 -> Z",
  "stages": [
    {"name": "F3", "gens": ["a", "b", "c"]},
    {"name": "Z3", "gens": ["a", "b", "c"], "rels": ["[a,b]", "[a,c]", "[b,c]"]},
    {"name": "Z2", "gens": ["a", "b"], "rels": ["[a,b]"]},
    {"name": "Z", "gens": ["a"]}
  ],
  "maps": [
    {"images": ["a", "b", "c"]},
    {"images": ["a", "b", "1"]},
    {"images": ["a", "1"]}
  ],
  "witnesses": ["[a,b]", "c", "b"],
  "terminal_rank": 1
}
)catalog"},
      {"resolutions/identity.json", R"catalog({
  "name": "F2 -> F2 identity (not proper)",
  "stages": [
    {"name": "F2", "gens": ["a", "b"]},
    {"name": "F2", "gens": ["a", "b"]}
  ],
  "maps": [
    {"images": ["a", "b"]}
  ],
  "witnesses": [],
  "terminal_rank": 2
}
)catalog"},
      {"resolutions/missing-witness.json", R"catalog({
  "name": "F2 -> Z2 -> Z with the second witness deleted",
  "stages": [
    {"name": "F2", "gens": ["a", "b"]},
    {"name": "Z2", "gens": ["a", "b"], "rels": ["[a,b]"]},
    {"name": "Z", "gens": ["a"]}
  ],
  "maps": [
    {"images": ["a", "b"]},
    {"images": ["a", "1"]}
  ],
  "witnesses": ["[a,b]"],
  "terminal_rank": 1
}
)catalog"},
      {"splittings/amalgam.split", R"catalog(# Z^2 *_{a = c} F(c, d): twist by c conjugates the right factor (d -> c d c^-1)
group Z2
gens: a b
rels: [a,b]

group F2
gens: c d

split amalgam left=Z2 right=F2 edge_left=a edge_right=c twist=c
)catalog"},
      {"splittings/z2-hnn.split", R"catalog(# Z^2 = <a, b | [b, a]> as an HNN extension of <a> over E = <a>; twist b -> b a
group Z
gens: a

split hnn vertex=Z edge=a conj=a letter=b twist=a
)catalog"},
  };
  return files;
}

inline std::string catalog_file(std::string_view name) {
  const auto& files = catalog_files();
  auto it = files.find(name);
  if (it == files.end()) throw Error("no catalog entry '" + std::string(name) + "'");
  return std::string(it->second);
}

}  // namespace limitgrp
