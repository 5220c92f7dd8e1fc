// JSON (de)serialization of channels, placements, strategies and trees.
//
// Channel files: { "t": int, "strings": [[[a,b], ...], ...] } with the
// empty string encoded as [].  Words travel as digit strings (t <= 10).

#pragma once

#include <string>

#include "ulam/channel.hpp"
#include "ulam/game.hpp"
#include "ulam/pack_cover.hpp"
#include "ulam/synth.hpp"

namespace ulam {

std::string channel_to_json(const Channel& c);
Channel channel_from_json(const std::string& text);
Channel load_channel(const std::string& path);
void save_text(const std::string& path, const std::string& text);

std::string placement_to_json(const PlacementProblem& p, const Placement& pl);

std::string strategy_to_json(const TwoBatchStrategy& s);
TwoBatchStrategy strategy_from_json(const std::string& text);
TwoBatchStrategy load_strategy(const std::string& path);

std::string tree_to_json(const StrategyTree& tree);

}  // namespace ulam
