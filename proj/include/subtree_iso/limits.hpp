#pragma once

#include <charconv>
#include <cstdlib>
#include <string_view>

#include "counting.hpp"
#include "treegen.hpp"

namespace subtree_iso {

/// Range caps shared by the search and verification routines.
struct Limits {
  int max_generate_order = kDefaultMaxGenerateOrder;
  int max_s_order = 14;
  int max_r_order = 16;
  std::size_t set_cap = kDefaultSetCap;

  /// Defaults, with every order cap replaced by $SUBTREE_ISO_MAXN when set.
  static Limits from_environment() {
    Limits l;
    if (const char* env = std::getenv("SUBTREE_ISO_MAXN")) {
      std::string_view s(env);
      int value = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec == std::errc{} && ptr == s.data() + s.size() && value > 0)
        l.max_generate_order = l.max_s_order = l.max_r_order = value;
    }
    return l;
  }
};

}  // namespace subtree_iso
