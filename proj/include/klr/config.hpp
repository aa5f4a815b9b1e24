#pragma once

#include <string>

#include "klr/thick.hpp"

namespace klr {

/*
  JSON configuration:

    {
      "labels": ["1", "2"],
      "bilinear": [[2, -1], [-1, 2]],
      "params": {                       // omit for all-default parameters
        "t": {"1,2": "1"},
        "r": {"1": "1"},
        "s": [{"i": "1", "j": "2", "p": 1, "q": 1, "val": "1"}]
      },
      "extend": true,                   // build the extended datum with the
      "residual_t": {"1,2": "1"},       // specialized parameters; residual_t
                                        // fills the free t(i,j), i.j < 0
      "lambda": [{"1": 2}],             // thick labels (color -> multiplicity)
      "nu": ["1"],                      // solid sequence
      "nu_ordered": false
    }

  Rationals are "p/q" strings.  "params" and "extend"/"residual_t" are
  mutually exclusive.
*/
struct LoadedConfig {
    ContextPtr ctx;
    ThickContextPtr thick; // null unless lambda/nu given
    bool nu_ordered = false;
};

LoadedConfig load_config(const std::string& path);
LoadedConfig parse_config(const std::string& json_text);

} // namespace klr
