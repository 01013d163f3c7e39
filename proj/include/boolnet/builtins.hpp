#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boolnet/core.hpp"

namespace boolnet {

// Sixteen 4-component maps that ship with the toolkit: all of them are
// chaotic and induce doubly stochastic chains, so they are ready-made
// generator cores. Addressed as F1..F16.
const std::vector<std::string>& builtin_names();

std::optional<BooleanMap> builtin_map(std::string_view name);

// Resolves a --function argument: a builtin name first, otherwise a path to
// a truth-table file.
BooleanMap load_map(const std::string& name_or_path);

}  // namespace boolnet
