#pragma once

#include <string>
#include <string_view>

#include "distspec/spectrum.hpp"

namespace distspec {

/// {"lambda","lower","upper","residual","iterations","vector"} with every
/// real printed to 17 significant digits.
std::string to_json(const PerronResult& r);

PerronResult perron_from_json(std::string_view text);

}  // namespace distspec
