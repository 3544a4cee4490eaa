#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pops/enumerate.hpp"
#include "pops/oeis.hpp"

namespace pops {

// Canned verification pipelines behind `pops reproduce <id>`. Each emits one
// JSON record per check through the sink and returns 0 iff every check
// passed. Pipelines compose the library operations; nothing lives only here.
using LineSink = std::function<void(const std::string&)>;

std::vector<std::string> reproduce_ids();

int reproduce(const std::string& id, const EnumLimits& limits,
              const OeisOptions& oeis_opts, const LineSink& sink);

}  // namespace pops
