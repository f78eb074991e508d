#pragma once

// Small helpers shared by the suite translation units.

#include <string>
#include <vector>

#include "finloc/frame.hpp"
#include "finloc/json_io.hpp"
#include "finloc/suites.hpp"

namespace finloc::suites::detail {

inline io::Json frame_witness(const FrameRef& f) { return io::frame_to_json(*f); }

inline std::vector<Elem> elements_of(const FiniteFrame& f) {
  std::vector<Elem> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Elem>(i);
  return out;
}

inline std::string count_text(std::size_t n, const char* noun) { return std::to_string(n) + " " + noun; }

}  // namespace finloc::suites::detail
