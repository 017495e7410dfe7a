// config.hpp — JSON configuration for the CLI

#pragma once

#include <filesystem>
#include <string>

#include "sfq/sweep.hpp"

namespace sfq {

// Parses the documented JSON schema into a SweepConfig. Unknown keys are
// rejected so typos never silently fall back to defaults.
SweepConfig sweep_config_from_json(const std::string& text);
SweepConfig load_sweep_config(const std::filesystem::path& path);

std::string sweep_config_to_json(const SweepConfig& config);

}  // namespace sfq
