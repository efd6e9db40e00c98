#pragma once

#include <string>

#include "mdtree/bijections.hpp"

namespace mdtree::detail {

inline void note(Trace* trace, std::string stage, std::string text) {
  if (trace) trace->push_back({std::move(stage), std::move(text)});
}

}  // namespace mdtree::detail
