#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace torickit {

/// A proof step that is not carried out by the toolkit but relied upon.
struct Citation {
  std::string id;
  std::string statement;

  friend bool operator==(const Citation &, const Citation &) = default;
};

/// The fixed catalogue of non-effective steps. Ids are stable.
const std::vector<Citation> &citation_catalog();

/// Looks up a catalogue entry; throws "UnknownCitation".
const Citation &cite(std::string_view id);

} // namespace torickit
