#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "epg/coset.hpp"
#include "epg/morphisms.hpp"
#include "epg/presentation.hpp"

namespace epg {

struct CatalogEntry {
  std::string name;
  Presentation presentation;
};

/// Catalog file format: one presentation per line, '#' starts a comment.
/// A trailing comment on a presentation line names the group.
inline std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::size_t line_start = 0;
  int line_no = 0;
  while (line_start <= text.size()) {
    ++line_no;
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    line_start = line_end + 1;

    std::string_view body = line;
    std::string name;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      body = line.substr(0, hash);
      std::string_view comment = line.substr(hash + 1);
      while (!comment.empty() && comment.front() == ' ') comment.remove_prefix(1);
      while (!comment.empty() && (comment.back() == ' ' || comment.back() == '\r')) comment.remove_suffix(1);
      name = std::string(comment);
    }
    while (!body.empty() && (body.back() == ' ' || body.back() == '\t' || body.back() == '\r'))
      body.remove_suffix(1);
    while (!body.empty() && (body.front() == ' ' || body.front() == '\t')) body.remove_prefix(1);
    if (body.empty()) continue;
    if (name.empty()) name = "G" + std::to_string(line_no);
    out.push_back(CatalogEntry{std::move(name), parse_presentation(body)});
  }
  return out;
}

/// The fourteen isomorphism types of order 16, as standard presentations.
/// The annotations are display names only; catalog_order16() re-validates
/// order and pairwise non-isomorphism instead of trusting them.
inline constexpr std::string_view kOrder16CatalogText = R"(# groups of order 16
<x | x^16 = 1>                                                          # C16
<x,y | x^8 = 1, y^2 = 1, x*y = y*x>                                    # C8xC2
<x,y | x^4 = 1, y^4 = 1, x*y = y*x>                                    # C4xC4
<x,y,z | x^4 = 1, y^2 = 1, z^2 = 1, x*y = y*x, x*z = z*x, y*z = z*y>   # C4xC2xC2
<a,b,c,d | a^2 = 1, b^2 = 1, c^2 = 1, d^2 = 1, a*b = b*a, a*c = c*a, a*d = d*a, b*c = c*b, b*d = d*b, c*d = d*c> # C2^4
<x,y | x^8 = 1, y^2 = 1, x^y = x^-1>                                   # D16
<x,y | x^8 = 1, y^2 = 1, x^y = x^3>                                    # SD16
<x,y | x^4 = y^2, y^4 = 1, x^y = x^-1>                                 # Q16
<x,y | x^8 = 1, y^2 = 1, x^y = x^5>                                    # M16
<x,y,z | x^4 = 1, y^2 = 1, x^y = x^-1, z^2 = 1, x*z = z*x, y*z = z*y>  # D8xC2
<x,y,z | x^2 = y^2, y^4 = 1, x^y = x^-1, z^2 = 1, x*z = z*x, y*z = z*y> # Q8xC2
<x,y | x^4 = 1, y^4 = 1, x^y = x^-1>                                   # C4:C4
<a,b,c | a^4 = 1, b^2 = 1, c^2 = 1, a*b = b*a, a^c = a*b, b^c = b>     # (C4xC2):C2
<a,b,c | a^4 = 1, b^2 = 1, a^b = a^-1, c^2 = a^2, a*c = c*a, b*c = c*b> # D8oC4
)";

/// Realizes the catalog and validates it: every table must have order 16
/// and all fourteen must be pairwise non-isomorphic. A failure means the
/// catalog data itself is broken.
inline std::vector<GroupTable> catalog_order16() {
  std::vector<GroupTable> out;
  for (const CatalogEntry& entry : parse_catalog(kOrder16CatalogText)) {
    GroupTable t = realize(entry.presentation, 100000).with_label(entry.name);
    if (t.size() != 16)
      throw std::logic_error("order-16 catalog entry " + entry.name + " realized with order " +
                             std::to_string(t.size()));
    out.push_back(std::move(t));
  }
  if (out.size() != 14)
    throw std::logic_error("order-16 catalog must contain 14 presentations, found " +
                           std::to_string(out.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (isomorphic(out[i], out[j]))
        throw std::logic_error("order-16 catalog entries " + out[i].label() + " and " +
                               out[j].label() + " are isomorphic");
  return out;
}

}  // namespace epg
